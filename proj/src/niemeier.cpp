#include "latk/niemeier.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>

namespace latk {

const std::vector<NiemeierSpec>& niemeier_catalog() {
    auto C = [](char f, int n) { return NiemeierComponent{f, n}; };
    static const std::vector<NiemeierSpec> cat = {
        {"12A2",
         std::vector<NiemeierComponent>(12, C('A', 2)),
         // extended ternary Golay code [I | B]
         {{1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
          {0, 1, 0, 0, 0, 0, 1, 0, 1, 2, 2, 1},
          {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 2, 2},
          {0, 0, 0, 1, 0, 0, 1, 2, 1, 0, 1, 2},
          {0, 0, 0, 0, 1, 0, 1, 2, 2, 1, 0, 1},
          {0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 1, 0}}},
        {"8A3",
         std::vector<NiemeierComponent>(8, C('A', 3)),
         // octacode: [3 c] for the cyclic shifts c of 2001011
         {{3, 2, 0, 0, 1, 0, 1, 1},
          {3, 0, 0, 1, 0, 1, 1, 2},
          {3, 0, 1, 0, 1, 1, 2, 0},
          {3, 1, 0, 1, 1, 2, 0, 0},
          {3, 0, 1, 1, 2, 0, 0, 1},
          {3, 1, 1, 2, 0, 0, 1, 0},
          {3, 1, 2, 0, 0, 1, 0, 1}}},
        {"6A4",
         std::vector<NiemeierComponent>(6, C('A', 4)),
         {{1, 0, 1, 4, 4, 1},
          {1, 1, 0, 1, 4, 4},
          {1, 4, 1, 0, 1, 4},
          {1, 4, 4, 1, 0, 1},
          {1, 1, 4, 4, 1, 0}}},
        {"6D4",
         std::vector<NiemeierComponent>(6, C('D', 4)),
         // additive generators of the hexacode under 1 <-> s, 2 <-> v, 3 <-> c
         {{1, 0, 0, 1, 3, 2},
          {0, 1, 0, 1, 2, 3},
          {0, 0, 1, 1, 1, 1},
          {2, 0, 0, 2, 1, 3},
          {0, 2, 0, 2, 3, 1},
          {0, 0, 2, 2, 2, 2}}},
        {"4A5 + D4",
         {C('A', 5), C('A', 5), C('A', 5), C('A', 5), C('D', 4)},
         {{2, 0, 2, 4, 0},
          {2, 2, 4, 0, 0},
          {2, 4, 0, 2, 0},
          {3, 3, 0, 0, 1},
          {3, 0, 3, 0, 2},
          {3, 0, 0, 3, 3}}},
        {"4A6",
         std::vector<NiemeierComponent>(4, C('A', 6)),
         {{1, 2, 1, 6}, {1, 1, 6, 2}, {1, 6, 2, 1}}},
        {"2A7 + 2D5",
         {C('A', 7), C('A', 7), C('D', 5), C('D', 5)},
         {{1, 1, 1, 2}, {1, 7, 2, 1}}},
        {"3A8",
         std::vector<NiemeierComponent>(3, C('A', 8)),
         {{1, 1, 4}, {4, 1, 1}, {1, 4, 1}}},
        {"4D6",
         std::vector<NiemeierComponent>(4, C('D', 6)),
         {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {0, 2, 3, 1}}},
        {"2A9 + D6",
         {C('A', 9), C('A', 9), C('D', 6)},
         {{2, 4, 0}, {5, 0, 1}, {0, 5, 3}}},
        {"4E6",
         std::vector<NiemeierComponent>(4, C('E', 6)),
         // tetracode
         {{1, 1, 1, 0}, {0, 1, 2, 1}}},
        {"A11 + D7 + E6", {C('A', 11), C('D', 7), C('E', 6)}, {{1, 1, 1}}},
        {"2A12", {C('A', 12), C('A', 12)}, {{1, 5}}},
        {"3D8",
         std::vector<NiemeierComponent>(3, C('D', 8)),
         {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}}},
        {"A15 + D9", {C('A', 15), C('D', 9)}, {{2, 1}}},
        {"A17 + E7", {C('A', 17), C('E', 7)}, {{3, 1}}},
        {"D10 + 2E7", {C('D', 10), C('E', 7), C('E', 7)}, {{1, 1, 0}, {3, 0, 1}}},
        {"2D12", {C('D', 12), C('D', 12)}, {{1, 2}, {2, 1}}},
        {"3E8", std::vector<NiemeierComponent>(3, C('E', 8)), {}},
        {"D16 + E8", {C('D', 16), C('E', 8)}, {{1, 0}}},
        {"A24", {C('A', 24)}, {{5}}},
        {"D24", {C('D', 24)}, {{1}}},
    };
    return cat;
}

const NiemeierSpec& niemeier_spec(const std::string& name) {
    for (const auto& s : niemeier_catalog())
        if (s.name == name) return s;
    throw error("niemeier_spec: unknown root type " + name);
}

namespace {

// dual-basis representative of a glue digit inside one component
RatVec digit_representative(const NiemeierComponent& c, const RatMat& dual_gram, int digit) {
    const int n = c.n;
    RatVec v(n, Rat(0));
    if (digit == 0) return v;
    auto row = [&](int i) { return dual_gram.row(i); };
    auto scaled = [&](const RatVec& w, int m) {
        RatVec r(w.size());
        for (size_t i = 0; i < w.size(); ++i) r[i] = Rat(m) * w[i];
        return r;
    };
    switch (c.family) {
        case 'A':
            if (digit < 0 || digit > n) throw error("glue digit out of range for A component");
            return scaled(row(0), digit);
        case 'D': {
            if (digit < 1 || digit > 3) throw error("glue digit out of range for D component");
            if (n % 2 == 1) return scaled(row(n - 1), digit);  // Z/4 generated by a spinor class
            if (digit == 2) return row(0);                     // vector class, norm -1
            if (digit == 1) return row(n - 1);                 // spinor, norm -n/4
            RatVec s = row(n - 1), w = row(0);
            for (int i = 0; i < n; ++i) s[i] += w[i];          // c = s + v
            return s;
        }
        case 'E':
            if (c.n == 6) {
                if (digit < 0 || digit > 2) throw error("glue digit out of range for E6");
                return scaled(row(0), digit);  // omega_1, order 3
            }
            if (c.n == 7) {
                if (digit < 0 || digit > 1) throw error("glue digit out of range for E7");
                return scaled(row(6), digit);  // omega_7, order 2
            }
            if (digit != 0) throw error("E8 admits no glue");
            return v;
        default:
            throw error("digit_representative: bad family");
    }
}

void check_digit_conventions(const NiemeierComponent& c, const Lattice& comp,
                             const RatMat& dual_gram) {
    // catch node-layout mistakes early: the chosen fundamental classes must
    // have the expected norms
    auto norm_of = [&](const RatVec& v) { return pair_with(comp.gram, v, v); };
    if (c.family == 'D') {
        if (dual_gram(0, 0) != Rat(-1))
            throw error("digit map: D vector class has wrong norm");
        if (norm_of(dual_gram.row(c.n - 1)) != make_rat(-c.n, 4))
            throw error("digit map: D spinor class has wrong norm");
    } else if (c.family == 'E' && c.n == 6) {
        if (norm_of(dual_gram.row(0)) != make_rat(-4, 3))
            throw error("digit map: E6 class has wrong norm");
    } else if (c.family == 'E' && c.n == 7) {
        if (norm_of(dual_gram.row(6)) != make_rat(-3, 2))
            throw error("digit map: E7 class has wrong norm");
    } else if (c.family == 'A') {
        if (norm_of(dual_gram.row(0)) != make_rat(-c.n, c.n + 1))
            throw error("digit map: A class has wrong norm");
    }
}

NiemeierLattice build_impl(const NiemeierSpec& spec) {
    NiemeierLattice out;
    out.spec = spec;

    std::vector<Lattice> comps;
    std::vector<RatMat> dual_grams;
    int total = 0;
    for (const auto& c : spec.components) {
        out.comp_offset.push_back(total);
        auto l = root_lattice(c.family, c.n);
        dual_grams.push_back(inverse(l.gram));
        check_digit_conventions(c, l, dual_grams.back());
        total += c.n;
        comps.push_back(std::move(l));
    }
    if (total != 24) throw error("niemeier spec " + spec.name + ": components do not sum to rank 24");

    Lattice sum = comps[0];
    for (size_t i = 1; i < comps.size(); ++i) sum = direct_sum(sum, comps[i]);
    sum.tag = spec.name + " roots";
    out.root_sum = sum;

    std::vector<RatVec> glue_vecs;
    for (const auto& word : spec.glue) {
        if (word.size() != spec.components.size())
            throw error("niemeier spec " + spec.name + ": glue word length mismatch");
        RatVec g(24, Rat(0));
        for (size_t c = 0; c < word.size(); ++c) {
            RatVec part = digit_representative(spec.components[c], dual_grams[c], word[c]);
            for (int j = 0; j < spec.components[c].n; ++j) g[out.comp_offset[c] + j] = part[j];
        }
        glue_vecs.push_back(std::move(g));
    }

    RatMat basis;
    out.lattice = overlattice_from_glue(sum, glue_vecs, &basis);
    out.lattice.tag = spec.name;
    out.basis_in_roots = basis;
    out.roots_to_n = inverse(basis);

    Int det = to_int(det_rat(out.lattice.gram));
    if (det != 1) throw error("niemeier " + spec.name + ": determinant " + det.get_str() + " != 1");
    if (!lattice_is_even(out.lattice)) throw error("niemeier " + spec.name + ": not even");

    out.roots = vectors_of_norm(out.lattice, Rat(-2));
    out.root_type = ade_classify_vectors(out.roots, out.lattice.gram);
    if (out.root_type != ADEType::parse(spec.name))
        throw error("niemeier " + spec.name + ": root type came out as " + out.root_type.str());
    return out;
}

}  // namespace

const NiemeierLattice& build_niemeier(const std::string& name) {
    static std::mutex lock;
    static std::map<std::string, NiemeierLattice> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(name);
    if (it == cache.end()) it = cache.emplace(name, build_impl(niemeier_spec(name))).first;
    return it->second;
}

std::string EmbeddingClass::tuple_key() const {
    std::string mw = "[";
    for (size_t i = 0; i < mw_torsion.size(); ++i)
        mw += (i ? ", " : "") + mw_torsion[i].get_str();
    mw += "]";
    return k_root_type.str() + " | " + mw + " | " + std::to_string(mw_rank) + " | " +
           k_dual_root_type.str();
}

// ---------------------------------------------------------------------------
// Candidate T-copies inside one component, as basis rows in local simple-root
// coordinates. For A_n and D_n the Weyl group acts through (signed)
// permutations of the standard coordinate model, so a short list of explicit
// representatives is exhaustive up to W; for E6/E7/E8 we enumerate inside the
// component's own root system and reduce by a Weyl-orbit BFS.
// ---------------------------------------------------------------------------

namespace {

// coordinate model of D_n: alpha_i = e_i - e_{i+1} (i < n-1), alpha_{n-1} =
// e_{n-2} + e_{n-1}; returns simple-root coordinates of a +-e_i +- e_j vector
IntVec d_coords(int n, const IntVec& ev) {
    IntMat m(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        m(i, i) = 1;
        m(i, i + 1) = -1;
    }
    m(n - 1, n - 2) = 1;
    m(n - 1, n - 1) = 1;
    auto sol = solve_left_int(m, ev);
    if (!sol) throw error("d_coords: vector outside the root lattice");
    return *sol;
}

IntVec evec(int n, int i, int si, int j, int sj) {
    IntVec v(n, Int(0));
    v[i] = si;
    v[j] = sj;
    return v;
}

struct LocalCandidates {
    std::vector<IntMat> a2;    // 2 rows each
    std::vector<IntMat> a2a2;  // 4 rows
    std::vector<IntMat> d4;    // 4 rows
};

IntMat rows_from(const std::vector<IntVec>& rows) {
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
}

// sign classes of an A2 span on three D-coordinates, one per projective class
const int kSigns[4][3] = {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}};

std::vector<IntMat> d_a2_reps(int n) {
    std::vector<IntMat> out;
    for (const auto& s : kSigns) {
        IntVec r1 = evec(n, 0, s[0], 1, -s[1]);
        IntVec r2 = evec(n, 1, s[1], 2, -s[2]);
        out.push_back(rows_from({d_coords(n, r1), d_coords(n, r2)}));
    }
    return out;
}

std::vector<IntMat> d_a2a2_reps(int n) {
    std::vector<IntMat> out;
    if (n < 6) return out;
    for (const auto& s : kSigns)
        for (const auto& t : kSigns) {
            IntVec r1 = evec(n, 0, s[0], 1, -s[1]);
            IntVec r2 = evec(n, 1, s[1], 2, -s[2]);
            IntVec r3 = evec(n, 3, t[0], 4, -t[1]);
            IntVec r4 = evec(n, 4, t[1], 5, -t[2]);
            out.push_back(rows_from(
                {d_coords(n, r1), d_coords(n, r2), d_coords(n, r3), d_coords(n, r4)}));
        }
    return out;
}

IntMat d_d4_rep(int n) {
    // D4 on the first four coordinates; basis ordered to match the D4 Gram
    IntVec b1 = evec(n, 0, 1, 1, -1);
    IntVec b2 = evec(n, 1, 1, 2, -1);  // trivalent node
    IntVec b3 = evec(n, 2, 1, 3, -1);
    IntVec b4 = evec(n, 2, 1, 3, 1);
    return rows_from({d_coords(n, b1), d_coords(n, b2), d_coords(n, b3), d_coords(n, b4)});
}

IntVec unit(int n, int i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    return v;
}

// --- Weyl-orbit machinery for E components --------------------------------

struct EOrbits {
    std::vector<IntMat> a2, a2a2, d4;
};

IntMat span_key(const IntMat& basis) { return hnf_rows(basis); }

EOrbits e_orbits(char fam, int n) {
    const Lattice comp = root_lattice(fam, n);
    const auto roots = vectors_of_norm(comp, Rat(-2));
    const int m = static_cast<int>(roots.size());
    auto pair_idx = integer_pairings(roots, comp.gram);
    auto p = [&](int i, int j) { return pair_idx[static_cast<size_t>(i) * m + j]; };

    std::map<IntVec, int> root_index;
    for (int i = 0; i < m; ++i) root_index[roots[i]] = i;

    // each simple reflection as a permutation of the root list
    std::vector<std::vector<int>> refl(n, std::vector<int>(m));
    for (int k = 0; k < n; ++k) {
        IntVec alpha = unit(n, k);
        for (int i = 0; i < m; ++i) {
            IntVec img = roots[i];
            Int c = to_int(pair_with(comp.gram, to_rat(img), to_rat(alpha)));
            for (int j = 0; j < n; ++j) img[j] += c * alpha[j];
            refl[k][i] = root_index.at(img);
        }
    }

    // unique A2 spans with one stored base each
    std::map<IntMat, int> span_id;
    std::vector<std::pair<int, int>> span_base;
    std::vector<IntMat> span_keys;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (j == i || p(i, j) != 1) continue;
            IntMat key = span_key(rows_from({roots[i], roots[j]}));
            if (span_id.emplace(key, static_cast<int>(span_keys.size())).second) {
                span_keys.push_back(key);
                span_base.push_back({i, j});
            }
        }
    const int ns = static_cast<int>(span_keys.size());

    std::vector<std::vector<int>> span_refl(n, std::vector<int>(ns));
    for (int k = 0; k < n; ++k)
        for (int s = 0; s < ns; ++s) {
            auto [i, j] = span_base[s];
            IntMat key = span_key(rows_from({roots[refl[k][i]], roots[refl[k][j]]}));
            span_refl[k][s] = span_id.at(key);
        }

    auto orbit_reps = [&](int count, const std::vector<std::vector<int>>& maps) {
        std::vector<int> reps;
        std::vector<char> seen(count, 0);
        for (int s = 0; s < count; ++s) {
            if (seen[s]) continue;
            reps.push_back(s);
            std::vector<int> stack = {s};
            seen[s] = 1;
            while (!stack.empty()) {
                int cur = stack.back();
                stack.pop_back();
                for (int k = 0; k < n; ++k) {
                    int nx = maps[k][cur];
                    if (!seen[nx]) {
                        seen[nx] = 1;
                        stack.push_back(nx);
                    }
                }
            }
        }
        return reps;
    };

    EOrbits out;
    for (int s : orbit_reps(ns, span_refl)) {
        auto [i, j] = span_base[s];
        out.a2.push_back(rows_from({roots[i], roots[j]}));
    }

    // orthogonal unordered span pairs
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> pair_id;
    auto spans_orthogonal = [&](int s1, int s2) {
        auto [a, b] = span_base[s1];
        auto [c, d] = span_base[s2];
        return p(a, c) == 0 && p(a, d) == 0 && p(b, c) == 0 && p(b, d) == 0;
    };
    for (int s1 = 0; s1 < ns; ++s1)
        for (int s2 = s1 + 1; s2 < ns; ++s2)
            if (spans_orthogonal(s1, s2)) {
                pair_id[{s1, s2}] = static_cast<int>(pairs.size());
                pairs.push_back({s1, s2});
            }
    std::vector<std::vector<int>> pair_refl(n, std::vector<int>(pairs.size()));
    for (int k = 0; k < n; ++k)
        for (size_t q = 0; q < pairs.size(); ++q) {
            int a = span_refl[k][pairs[q].first];
            int b = span_refl[k][pairs[q].second];
            if (a > b) std::swap(a, b);
            pair_refl[k][q] = pair_id.at({a, b});
        }
    for (int q : orbit_reps(static_cast<int>(pairs.size()), pair_refl)) {
        auto [s1, s2] = pairs[q];
        auto [a, b] = span_base[s1];
        auto [c, d] = span_base[s2];
        out.a2a2.push_back(rows_from({roots[a], roots[b], roots[c], roots[d]}));
    }

    // D4 spans: trivalent root r0 with three mutually orthogonal roots pairing 1
    std::map<IntMat, int> d4_id;
    std::vector<std::array<int, 4>> d4_base;
    std::vector<IntMat> d4_keys;
    for (int r0 = 0; r0 < m; ++r0) {
        std::vector<int> cand;
        for (int i = 0; i < m; ++i)
            if (p(r0, i) == 1) cand.push_back(i);
        for (size_t x = 0; x < cand.size(); ++x)
            for (size_t y = x + 1; y < cand.size(); ++y) {
                if (p(cand[x], cand[y]) != 0) continue;
                for (size_t z = y + 1; z < cand.size(); ++z) {
                    if (p(cand[x], cand[z]) != 0 || p(cand[y], cand[z]) != 0) continue;
                    IntMat key = span_key(
                        rows_from({roots[cand[x]], roots[r0], roots[cand[y]], roots[cand[z]]}));
                    if (d4_id.emplace(key, static_cast<int>(d4_keys.size())).second) {
                        d4_keys.push_back(key);
                        d4_base.push_back({static_cast<int>(cand[x]), r0,
                                           static_cast<int>(cand[y]), static_cast<int>(cand[z])});
                    }
                }
            }
    }
    std::vector<std::vector<int>> d4_refl(n, std::vector<int>(d4_keys.size()));
    for (int k = 0; k < n; ++k)
        for (size_t s = 0; s < d4_keys.size(); ++s) {
            auto& b = d4_base[s];
            IntMat key = span_key(rows_from({roots[refl[k][b[0]]], roots[refl[k][b[1]]],
                                             roots[refl[k][b[2]]], roots[refl[k][b[3]]]}));
            d4_refl[k][s] = d4_id.at(key);
        }
    for (int s : orbit_reps(static_cast<int>(d4_keys.size()), d4_refl)) {
        auto& b = d4_base[s];
        out.d4.push_back(rows_from({roots[b[0]], roots[b[1]], roots[b[2]], roots[b[3]]}));
    }
    return out;
}

const EOrbits& e_orbits_cached(char fam, int n) {
    static std::mutex lock;
    static std::map<std::pair<char, int>, EOrbits> cache;
    auto key = std::make_pair(fam, n);
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, e_orbits(fam, n)).first;
    return it->second;
}

LocalCandidates local_candidates(const NiemeierComponent& c, TKind kind) {
    LocalCandidates out;
    if (c.family == 'A') {
        if (kind == TKind::TwoA2) {
            if (c.n >= 2) out.a2.push_back(rows_from({unit(c.n, 0), unit(c.n, 1)}));
            if (c.n >= 5)
                out.a2a2.push_back(
                    rows_from({unit(c.n, 0), unit(c.n, 1), unit(c.n, 3), unit(c.n, 4)}));
        }
    } else if (c.family == 'D') {
        if (kind == TKind::D4) {
            out.d4.push_back(d_d4_rep(c.n));
        } else {
            out.a2 = d_a2_reps(c.n);
            out.a2a2 = d_a2a2_reps(c.n);
        }
    } else {
        const auto& orb = e_orbits_cached(c.family, c.n);
        if (kind == TKind::D4) {
            out.d4 = orb.d4;
        } else {
            out.a2 = orb.a2;
            out.a2a2 = orb.a2a2;
        }
    }
    return out;
}

// embed local rows of one component into 24-wide root_sum coordinates
IntMat widen(const IntMat& local, int offset) {
    IntMat m(local.rows, 24);
    for (int i = 0; i < local.rows; ++i)
        for (int j = 0; j < local.cols; ++j) m(i, offset + j) = local(i, j);
    return m;
}

IntMat vstack(const IntMat& a, const IntMat& b) {
    IntMat m(a.rows + b.rows, a.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) m(a.rows + i, j) = b(i, j);
    return m;
}

}  // namespace

std::vector<EmbeddingClass> find_embeddings(const NiemeierLattice& nl, TKind kind) {
    const Int p = (kind == TKind::D4) ? 2 : 3;
    const auto& comps = nl.spec.components;

    std::vector<IntMat> candidates;
    std::vector<LocalCandidates> local;
    for (size_t c = 0; c < comps.size(); ++c) local.push_back(local_candidates(comps[c], kind));
    for (size_t c = 0; c < comps.size(); ++c) {
        if (kind == TKind::D4) {
            for (const auto& b : local[c].d4) candidates.push_back(widen(b, nl.comp_offset[c]));
        } else {
            for (const auto& b : local[c].a2a2) candidates.push_back(widen(b, nl.comp_offset[c]));
            for (size_t c2 = c + 1; c2 < comps.size(); ++c2)
                for (const auto& b1 : local[c].a2)
                    for (const auto& b2 : local[c2].a2)
                        candidates.push_back(
                            vstack(widen(b1, nl.comp_offset[c]), widen(b2, nl.comp_offset[c2])));
        }
    }

    Lattice tlat = (kind == TKind::D4)
                       ? root_lattice('D', 4)
                       : direct_sum(root_lattice('A', 2), root_lattice('A', 2));

    std::map<std::string, EmbeddingClass> classes;
    for (const auto& cand_roots : candidates) {
        IntMat basis(4, 24);
        for (int i = 0; i < 4; ++i) {
            RatVec v = to_rat(cand_roots.row(i)) * nl.roots_to_n;
            for (int j = 0; j < 24; ++j) basis(i, j) = to_int(v[j]);
        }
        Sublattice t = make_sublattice(nl.lattice, basis);
        if (t.induced().gram != tlat.gram) throw error("find_embeddings: bad candidate basis");
        if (!is_primitive(t)) continue;

        EmbeddingClass ec;
        ec.niemeier = nl.spec.name;
        ec.t_basis = basis;
        Sublattice k = orthogonal_complement(t);
        ec.k_basis = k.basis;

        // roots of K are exactly the roots of N orthogonal to T
        std::vector<IntVec> trows(4);
        for (int i = 0; i < 4; ++i) trows[i] = basis.row(i);
        auto cross = integer_cross_pairings(nl.roots, trows, nl.lattice.gram);
        std::vector<IntVec> kroots;
        for (size_t r = 0; r < nl.roots.size(); ++r) {
            bool orth = true;
            for (int i = 0; i < 4 && orth; ++i)
                if (cross[r * 4 + i] != 0) orth = false;
            if (orth) kroots.push_back(nl.roots[r]);
        }
        ec.k_root_type = ade_classify_vectors(kroots, nl.lattice.gram);

        // Mordell-Weil data: K / <roots of K>
        IntMat rb(0, 24);
        if (!kroots.empty()) {
            IntMat rows(static_cast<int>(kroots.size()), 24);
            for (size_t i = 0; i < kroots.size(); ++i)
                for (int j = 0; j < 24; ++j) rows(static_cast<int>(i), j) = kroots[i][j];
            rb = hnf_rows(rows);
        }
        int rrank = rb.rows;
        ec.mw_rank = 20 - rrank;
        if (rrank > 0) {
            LeftSolver solver(k.basis);
            IntMat x(rrank, 20);
            for (int i = 0; i < rrank; ++i) {
                auto sol = solver.solve(rb.row(i));
                if (!sol) throw error("find_embeddings: root outside K");
                for (int j = 0; j < 20; ++j) x(i, j) = (*sol)[j];
            }
            auto snf = smith_normal_form(x);
            for (const auto& d : snf.invariant_factors())
                if (d > 1) ec.mw_torsion.push_back(d);
        }
        if (ec.mw_torsion.empty()) ec.mw_torsion.push_back(1);

        // sigma = 1 quasi-elliptic test: root sublattice p-elementary of rank 20
        ec.qe_sigma1 = false;
        if (rrank == 20) {
            RatMat rg = to_rat(rb) * nl.lattice.gram * to_rat(rb).transpose();
            RatMat pinv = inverse(rg);
            for (auto& v : pinv.a) v *= Rat(p);
            ec.qe_sigma1 = is_integral(pinv);
        }

        // K^v(p) and its roots
        RatMat kg = to_rat(k.basis) * nl.lattice.gram * to_rat(k.basis).transpose();
        RatMat kvp = inverse(kg);
        for (auto& v : kvp.a) v *= Rat(p);
        if (!is_integral(kvp)) throw error("find_embeddings: K not p-elementary");
        Lattice kdual = make_lattice(kvp, "K^v(p)");
        auto [dsub, dtype] = root_sublattice(kdual);
        ec.k_dual_root_type = dtype;
        ec.qe_sigma10 = false;
        if (dsub.basis.rows == 20) {
            RatMat rg = to_rat(dsub.basis) * kdual.gram * to_rat(dsub.basis).transpose();
            RatMat pinv = inverse(rg);
            for (auto& v : pinv.a) v *= Rat(p);
            ec.qe_sigma10 = is_integral(pinv);
        }

        classes.emplace(ec.tuple_key(), std::move(ec));
    }

    std::vector<EmbeddingClass> out;
    for (auto& [key, ec] : classes) {
        (void)key;
        out.push_back(std::move(ec));
    }
    return out;
}

}  // namespace latk
