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

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "z4dc/code.hpp"
#include "z4dc/gray.hpp"

namespace z4dc {

// Monic divisors of x^n - 1 over Z4: Hensel lifts of all products of the
// irreducible factors mod 2, ordered by degree then coefficients.
// Throws LatticeTooLarge when 2^(factor count) exceeds max_size.
std::vector<PolyZ4> divisor_lattice(int n, std::size_t max_size = std::size_t{1} << 16);

// Pairs (f, g) with g | f | x^n - 1 taken from a lattice.
std::vector<std::pair<PolyZ4, PolyZ4>> divisor_chains(const std::vector<PolyZ4>& lattice);

struct SearchOptions {
    std::set<CodeCase> forms{CodeCase::first_only, CodeCase::second_only, CodeCase::both};
    // Case (ii): l runs over all polynomials of degree <= this (capped at r-1).
    // Case (iii): l runs over degree < deg f1, further capped by this bound.
    std::optional<int> max_l_degree;
    std::optional<int> f2_degree;  // only second generators with deg f2 equal to this
    int distance_floor = 0;
    std::uint64_t cap = default_enum_cap();  // per-candidate enumeration limit
    unsigned jobs = 1;
    bool retain_all = false;  // keep every evaluated code, not only the Pareto set
    std::size_t max_lattice = std::size_t{1} << 16;
    std::uint64_t max_candidates = std::uint64_t{1} << 22;
};

struct SearchResult {
    DoubleCyclicCode code;
    int n = 0;
    CodeSize M;
    int d = 0;
    int rank = 0;  // position in the sorted output, from 1
};

struct SearchReport {
    int r = 1, s = 1;
    std::uint64_t candidates = 0;  // valid quintuples generated
    std::uint64_t evaluated = 0;
    std::uint64_t skipped_cap = 0;
    std::vector<SearchResult> results;
    std::vector<std::string> notices;
};

// Every valid quintuple the search would evaluate, in evaluation order.
std::vector<DoubleCyclicCode> search_candidates(int r, int s, const SearchOptions& opt = {});

// Results are sorted by descending d, then descending M; ties keep candidate order.
SearchReport search(int r, int s, const SearchOptions& opt = {});

// CSV with header r,s,f1,g1,l,f2,g2,n,log2M,d; absent generators are written as "-".
std::string search_csv(const SearchReport& rep);

}  // namespace z4dc
