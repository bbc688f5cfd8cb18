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

#include "z4dc/gray.hpp"

#include <thread>
#include <unordered_set>
#include <vector>

namespace z4dc {

namespace {

int packed_weight(const PackedWord& w, int nwords, const LeeTable& t) {
    int total = 0;
    for (int i = 0; i < nwords; ++i) {
        total += t.w1 * std::popcount(w.lo[i] & ~w.hi[i]) + t.w2 * std::popcount(w.hi[i] & ~w.lo[i]) +
                 t.w3 * std::popcount(w.lo[i] & w.hi[i]);
    }
    return total;
}

void check_same_length(std::size_t a, std::size_t b) {
    if (a != b) throw Error(ErrorKind::DimensionMismatch, "vectors differ in length");
}

}  // namespace

int lee_weight_symbol(int a) { return LeeTable{}(((a % 4) + 4) % 4); }

int lee_weight(const VecZ4& v) {
    int w = 0;
    for (auto a : v) w += lee_weight_symbol(a);
    return w;
}

int lee_distance(const VecZ4& u, const VecZ4& v) {
    check_same_length(u.size(), v.size());
    return lee_weight(sub(u, v));
}

VecF2 gray_map(const VecZ4& v) {
    VecF2 out;
    out.reserve(2 * v.size());
    for (auto a : v) {
        const std::uint8_t hi = (a >> 1) & 1, lo = a & 1;
        out.push_back(hi);
        out.push_back(hi ^ lo);
    }
    return out;
}

int hamming_distance(const VecF2& a, const VecF2& b) {
    check_same_length(a.size(), b.size());
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
    return d;
}

LeeEnumerator lee_enumerator(const DoubleCyclicCode& c, const EnumOptions& opt) {
    const CodewordEnumerator e(c, opt.cap);
    const int max_w = std::max({opt.table.w1, opt.table.w2, opt.table.w3, 0}) * e.length();
    const std::uint64_t n = e.count();
    const unsigned jobs = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(opt.jobs, n)));

    std::vector<std::vector<std::uint64_t>> hist(jobs, std::vector<std::uint64_t>(static_cast<std::size_t>(max_w) + 1, 0));
    auto work = [&](unsigned j) {
        auto& h = hist[j];
        const std::uint64_t begin = n * j / jobs, end = n * (j + 1) / jobs;
        const int nw = e.nwords();
        const LeeTable t = opt.table;
        e.for_each(begin, end, [&](const PackedWord& w) { ++h[static_cast<std::size_t>(packed_weight(w, nw, t))]; });
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
        for (auto& th : pool) th.join();
    }

    LeeEnumerator out;
    for (std::size_t w = 0; w <= static_cast<std::size_t>(max_w); ++w) {
        std::uint64_t total = 0;
        for (const auto& h : hist) total += h[w];
        if (total) out[static_cast<int>(w)] = total;
    }
    return out;
}

int min_lee_distance(const DoubleCyclicCode& c, const EnumOptions& opt) {
    return min_lee_distance(lee_enumerator(c, opt));
}

std::optional<NonlinearityWitness> nonlinearity_witness(const DoubleCyclicCode& c) {
    const MatZ4 g = generator_matrix(c);
    const HowellForm h = howell(g);
    for (std::size_t i = 0; i < g.nrows(); ++i) {
        for (std::size_t j = i + 1; j < g.nrows(); ++j) {
            const VecZ4& a = g.row(i);
            const VecZ4& b = g.row(j);
            VecZ4 twice(a.size());
            for (std::size_t k = 0; k < a.size(); ++k) twice[k] = static_cast<std::uint8_t>(2 * (a[k] & b[k] & 1));
            if (h.contains(twice)) continue;
            const VecZ4 pre = add(add(a, b), twice);
            return NonlinearityWitness{CodeVector::split(a, c.r(), c.s()), CodeVector::split(b, c.r(), c.s()),
                                       CodeVector::split(pre, c.r(), c.s())};
        }
    }
    return std::nullopt;
}

bool gray_image_closed_bruteforce(const DoubleCyclicCode& c, std::uint64_t cap) {
    const auto words = enumerate_codewords(c, cap);
    std::vector<VecF2> image;
    std::unordered_set<std::string> seen;
    for (const auto& w : words) {
        VecF2 b = gray_map(w.concat());
        seen.emplace(b.begin(), b.end());
        image.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < image.size(); ++i) {
        for (std::size_t j = i + 1; j < image.size(); ++j) {
            std::string x(image[i].size(), 0);
            for (std::size_t k = 0; k < x.size(); ++k) x[k] = static_cast<char>(image[i][k] ^ image[j][k]);
            if (!seen.count(x)) return false;
        }
    }
    return true;
}

GrayParams gray_image_params(const DoubleCyclicCode& c, const LeeEnumerator& e) {
    GrayParams p;
    p.n = 2 * (c.r() + c.s());
    p.M = c.size();
    if (p.M.log2() > 0) p.d = min_lee_distance(e);
    p.witness = nonlinearity_witness(c);
    p.linear_image = !p.witness.has_value();
    return p;
}

GrayParams gray_image_params(const DoubleCyclicCode& c, const EnumOptions& opt) {
    return gray_image_params(c, lee_enumerator(c, opt));
}

void export_gray_image(const DoubleCyclicCode& c, std::ostream& out, std::uint64_t cap) {
    const CodewordEnumerator e(c, cap);
    std::string line;
    e.for_each(0, e.count(), [&](const PackedWord& w) {
        const VecF2 b = gray_map(w.unpack(static_cast<std::size_t>(e.length())));
        line.assign(b.size(), '0');
        for (std::size_t k = 0; k < b.size(); ++k)
            if (b[k]) line[k] = '1';
        out << line << '\n';
    });
}

}  // namespace z4dc
