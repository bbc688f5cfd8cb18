// Copyright 2026 The z4dc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "z4dc/search.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

#include "z4dc/poly_io.hpp"

namespace z4dc {

namespace {

// All polynomials of degree <= max_deg (max_deg < 0 gives just 0).
std::vector<PolyZ4> all_polys(int max_deg) {
    std::vector<PolyZ4> out;
    const int len = std::max(max_deg + 1, 0);
    std::uint64_t total = std::uint64_t{1} << (2 * len);
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint8_t> c(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code >> (2 * i) & 3);
        out.emplace_back(std::move(c));
    }
    return out;
}

struct Eval {
    bool done = false;
    bool skipped = false;
    std::optional<int> d;
};

}  // namespace

std::vector<PolyZ4> divisor_lattice(int n, std::size_t max_size) {
    const auto factors = factor_cyclic_f2(n);
    if (factors.size() >= 63 || (std::size_t{1} << factors.size()) > max_size)
        throw Error(ErrorKind::LatticeTooLarge,
                    "x^" + std::to_string(n) + "-1 has " + std::to_string(factors.size()) + " irreducible factors");
    std::vector<PolyZ4> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << factors.size()); ++mask) {
        PolyF2 p{1};
        for (std::size_t i = 0; i < factors.size(); ++i)
            if (mask >> i & 1) p = p * factors[i];
        out.push_back(hensel_lift(p, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<PolyZ4, PolyZ4>> divisor_chains(const std::vector<PolyZ4>& lattice) {
    std::vector<std::pair<PolyZ4, PolyZ4>> out;
    for (const auto& f : lattice)
        for (const auto& g : lattice)
            if (divides(g, f)) out.emplace_back(f, g);
    return out;
}

std::vector<DoubleCyclicCode> search_candidates(int r, int s, const SearchOptions& opt) {
    const auto lat_r = divisor_lattice(r, opt.max_lattice);
    const auto lat_s = divisor_lattice(s, opt.max_lattice);
    const PolyZ4 xr = cyclic_modulus(r), xs = cyclic_modulus(s);

    std::vector<std::pair<PolyZ4, PolyZ4>> first, second;
    for (auto& ch : divisor_chains(lat_r))
        if (!(ch.first == xr && ch.second == xr)) first.push_back(std::move(ch));
    for (auto& ch : divisor_chains(lat_s)) {
        if (ch.first == xs && ch.second == xs) continue;
        if (opt.f2_degree && ch.first.degree() != *opt.f2_degree) continue;
        second.push_back(std::move(ch));
    }

    std::vector<DoubleCyclicCode> out;
    auto push = [&](const CodeSpec& sp) {
        try {
            out.push_back(validate(sp));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::EnumerationCapExceeded) throw;
            return;  // invalid quintuple
        }
        if (out.size() > opt.max_candidates)
            throw Error(ErrorKind::LatticeTooLarge,
                        "more than " + std::to_string(opt.max_candidates) + " candidates", "candidates");
    };
    auto base = [&] {
        CodeSpec sp;
        sp.r = r;
        sp.s = s;
        return sp;
    };

    if (opt.forms.count(CodeCase::first_only)) {
        for (const auto& [f1, g1] : first) {
            CodeSpec sp = base();
            sp.f1 = f1;
            sp.g1 = g1;
            push(sp);
        }
    }
    if (opt.forms.count(CodeCase::second_only)) {
        const int bound = std::min(opt.max_l_degree.value_or(r - 1), r - 1);
        const auto ls = all_polys(bound);
        for (const auto& [f2, g2] : second)
            for (const auto& l : ls) {
                CodeSpec sp = base();
                sp.l = l;
                sp.f2 = f2;
                sp.g2 = g2;
                push(sp);
            }
    }
    if (opt.forms.count(CodeCase::both)) {
        for (const auto& [f1, g1] : first) {
            int bound = f1.degree() - 1;
            if (opt.max_l_degree) bound = std::min(bound, *opt.max_l_degree);
            const auto ls = all_polys(bound);
            for (const auto& [f2, g2] : second)
                for (const auto& l : ls) {
                    CodeSpec sp = base();
                    sp.f1 = f1;
                    sp.g1 = g1;
                    sp.l = l;
                    sp.f2 = f2;
                    sp.g2 = g2;
                    push(sp);
                }
        }
    }
    return out;
}

SearchReport search(int r, int s, const SearchOptions& opt) {
    SearchReport rep;
    rep.r = r;
    rep.s = s;
    const auto cands = search_candidates(r, s, opt);
    rep.candidates = cands.size();

    std::vector<Eval> evals(cands.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        EnumOptions eo;
        eo.cap = opt.cap;
        for (std::size_t i = begin; i < end; ++i) {
            const auto& c = cands[i];
            Eval& ev = evals[i];
            ev.done = true;
            if (c.size().log2() >= 64 || c.size().count() > opt.cap) {
                ev.skipped = true;
                continue;
            }
            const auto e = lee_enumerator(c, eo);
            if (c.size().log2() > 0) ev.d = min_lee_distance(e);
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(std::max<std::size_t>(cands.size(), 1))));
    if (jobs == 1) {
        work(0, cands.size());
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(work, cands.size() * j / jobs, cands.size() * (j + 1) / jobs);
        for (auto& t : pool) t.join();
    }

    // First representative per (log2 M, d), in candidate order.
    std::map<std::pair<int, int>, std::size_t> rep_of;
    std::vector<SearchResult> all;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const Eval& ev = evals[i];
        if (ev.skipped) {
            ++rep.skipped_cap;
            rep.notices.push_back("skipped candidate " + std::to_string(i) + ": 2^" +
                                  std::to_string(cands[i].size().log2()) + " codewords exceed the cap");
            continue;
        }
        ++rep.evaluated;
        if (!ev.d || *ev.d < opt.distance_floor) continue;
        SearchResult res{cands[i], 2 * (r + s), cands[i].size(), *ev.d, 0};
        if (opt.retain_all) {
            all.push_back(std::move(res));
            continue;
        }
        const auto key = std::make_pair(res.M.log2(), res.d);
        if (!rep_of.count(key)) {
            rep_of[key] = all.size();
            all.push_back(std::move(res));
        }
    }

    if (!opt.retain_all) {
        std::map<int, int> best_d_for_m, best_m_for_d;
        for (const auto& res : all) {
            auto& bd = best_d_for_m[res.M.log2()];
            bd = std::max(bd, res.d);
            auto& bm = best_m_for_d[res.d];
            bm = std::max(bm, res.M.log2());
        }
        std::vector<SearchResult> kept;
        for (auto& res : all)
            if (res.d == best_d_for_m[res.M.log2()] || res.M.log2() == best_m_for_d[res.d]) kept.push_back(std::move(res));
        all = std::move(kept);
    }

    std::stable_sort(all.begin(), all.end(), [](const SearchResult& a, const SearchResult& b) {
        if (a.d != b.d) return a.d > b.d;
        return a.M.log2() > b.M.log2();
    });
    for (std::size_t i = 0; i < all.size(); ++i) all[i].rank = static_cast<int>(i) + 1;
    rep.results = std::move(all);
    return rep;
}

std::string search_csv(const SearchReport& rep) {
    std::ostringstream os;
    os << "r,s,f1,g1,l,f2,g2,n,log2M,d\n";
    for (const auto& res : rep.results) {
        const auto& c = res.code;
        const bool a = c.first_present(), b = c.second_present();
        os << c.r() << ',' << c.s() << ',' << (a ? format_poly(c.f1()) : "-") << ',' << (a ? format_poly(c.g1()) : "-")
           << ',' << (b ? format_poly(c.l()) : "-") << ',' << (b ? format_poly(c.f2()) : "-") << ','
           << (b ? format_poly(c.g2()) : "-") << ',' << res.n << ',' << res.M.log2() << ',' << res.d << '\n';
    }
    return os.str();
}

}  // namespace z4dc
