#include "latk/surface.hpp"

#include <algorithm>
#include <set>

namespace latk {

namespace {

// --- F_4 = F_2[t]/(t^2 + t + 1), elements encoded 0..3 as bit pairs --------

int f4_add(int a, int b) { return a ^ b; }

int f4_mul(int a, int b) {
    // polynomial product reduced by t^2 = t + 1
    int r = 0;
    if (b & 1) r ^= a;
    if (b & 2) {
        int at = ((a & 1) ? 2 : 0) ^ ((a & 2) ? 3 : 0);  // a * t
        r ^= at;
    }
    return r;
}

int f4_inv(int a) {
    for (int x = 1; x < 4; ++x)
        if (f4_mul(a, x) == 1) return x;
    throw error("f4_inv: zero");
}

std::array<int, 3> f4_normalize(std::array<int, 3> v) {
    for (int i = 0; i < 3; ++i) {
        if (v[i] == 0) continue;
        int inv = f4_inv(v[i]);
        for (int j = 0; j < 3; ++j) v[j] = f4_mul(v[j], inv);
        return v;
    }
    throw error("f4_normalize: zero vector");
}

// --- F_9 = F_3[t]/(t^2 + 1), elements encoded a + 3b ----------------------

int f9_add(int x, int y) {
    int a = (x % 3 + y % 3) % 3;
    int b = (x / 3 + y / 3) % 3;
    return a + 3 * b;
}

int f9_mul(int x, int y) {
    int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
    // (a + bt)(c + dt) with t^2 = -1
    int re = (a * c + 2 * b * d) % 3;  // -bd = 2bd mod 3
    int im = (a * d + b * c) % 3;
    return re + 3 * im;
}

int f9_inv(int x) {
    for (int y = 1; y < 9; ++y)
        if (f9_mul(x, y) == 1) return y;
    throw error("f9_inv: zero");
}

int f9_pow4(int x) {
    int s = f9_mul(x, x);
    return f9_mul(s, s);
}

using P3Point = std::array<int, 4>;

P3Point f9_normalize(P3Point v) {
    for (int i = 0; i < 4; ++i) {
        if (v[i] == 0) continue;
        int inv = f9_inv(v[i]);
        for (int j = 0; j < 4; ++j) v[j] = f9_mul(v[j], inv);
        return v;
    }
    throw error("f9_normalize: zero vector");
}

}  // namespace

IncidencePlane build_p2_f4() {
    IncidencePlane p;
    std::set<std::array<int, 3>> seen;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) {
                if (!x && !y && !z) continue;
                auto n = f4_normalize({x, y, z});
                if (seen.insert(n).second) p.points.push_back(n);
            }
    std::sort(p.points.begin(), p.points.end());
    p.lines = p.points;  // self-dual coordinates
    if (p.points.size() != 21) throw error("build_p2_f4: point count != 21");

    p.incidence.assign(21, std::vector<bool>(21, false));
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < 21; ++j) {
            int s = 0;
            for (int k = 0; k < 3; ++k) s = f4_add(s, f4_mul(p.points[i][k], p.lines[j][k]));
            p.incidence[i][j] = (s == 0);
        }

    // structural checks: 5 points per line, 5 lines per point, two points on
    // exactly one common line
    for (int j = 0; j < 21; ++j) {
        int c = 0;
        for (int i = 0; i < 21; ++i) c += p.incidence[i][j];
        if (c != 5) throw error("build_p2_f4: line without 5 points");
    }
    for (int i = 0; i < 21; ++i) {
        int c = 0;
        for (int j = 0; j < 21; ++j) c += p.incidence[i][j];
        if (c != 5) throw error("build_p2_f4: point without 5 lines");
    }
    for (int i = 0; i < 21; ++i)
        for (int i2 = i + 1; i2 < 21; ++i2) {
            int common = 0;
            for (int j = 0; j < 21; ++j) common += p.incidence[i][j] && p.incidence[i2][j];
            if (common != 1) throw error("build_p2_f4: point pair not on a unique line");
        }
    return p;
}

std::vector<std::array<int, 6>> general_six_point_sets(const IncidencePlane& p) {
    std::vector<std::array<int, 6>> out;
    // a set is general iff every line meets it in at most 2 points
    for (int a = 0; a < 21; ++a)
        for (int b = a + 1; b < 21; ++b)
            for (int c = b + 1; c < 21; ++c)
                for (int d = c + 1; d < 21; ++d)
                    for (int e = d + 1; e < 21; ++e)
                        for (int f = e + 1; f < 21; ++f) {
                            bool ok = true;
                            for (int j = 0; j < 21 && ok; ++j) {
                                int cnt = p.incidence[a][j] + p.incidence[b][j] +
                                          p.incidence[c][j] + p.incidence[d][j] +
                                          p.incidence[e][j] + p.incidence[f][j];
                                if (cnt >= 3) ok = false;
                            }
                            if (ok) out.push_back({a, b, c, d, e, f});
                        }
    return out;
}

namespace {

// integral row span of rational generator rows; returns basis rows (rational)
RatMat integral_span_basis(const std::vector<RatVec>& gens, int width) {
    Int scale = 1;
    for (const auto& g : gens)
        for (const auto& x : g) scale = lcm(scale, den(x));
    IntMat rows(static_cast<int>(gens.size()), width);
    for (size_t i = 0; i < gens.size(); ++i)
        for (int j = 0; j < width; ++j) rows(static_cast<int>(i), j) = to_int(gens[i][j] * Rat(scale));
    IntMat h = hnf_rows(rows);
    RatMat b(h.rows, width);
    for (int i = 0; i < h.rows; ++i)
        for (int j = 0; j < width; ++j) b(i, j) = make_rat(h(i, j), scale);
    return b;
}

}  // namespace

SurfaceLatticeModel build_S21() {
    auto plane = build_p2_f4();
    const int n = 22;  // ambient basis h, e_1..e_21
    RatMat amb(n, n);
    amb(0, 0) = 2;
    for (int i = 1; i < n; ++i) amb(i, i) = -2;
    Lattice ambient = make_lattice(amb, "blowup ambient");

    auto evec = [&](int i) {  // e_{i+1}
        RatVec v(n, Rat(0));
        v[1 + i] = 1;
        return v;
    };
    RatVec h(n, Rat(0));
    h[0] = 1;

    // proper transform of line j: f_j = (h - sum of e_i over incident points)/2
    std::vector<RatVec> fvec(21, RatVec(n, Rat(0)));
    for (int j = 0; j < 21; ++j) {
        RatVec v = h;
        for (int i = 0; i < 21; ++i)
            if (plane.incidence[i][j]) v[1 + i] -= 1;
        for (auto& x : v) x /= 2;
        fvec[j] = v;
        if (pair_with(amb, v, v) != Rat(-2)) throw error("build_S21: f_j norm != -2");
        for (int i = 0; i < 21; ++i) {
            Rat want = plane.incidence[i][j] ? 1 : 0;
            if (pair_with(amb, v, evec(i)) != want) throw error("build_S21: f_j pairing wrong");
        }
    }

    std::vector<RatVec> gens;
    for (int i = 0; i < 21; ++i) gens.push_back(evec(i));
    for (int j = 0; j < 21; ++j) gens.push_back(fvec[j]);
    RatMat basis = integral_span_basis(gens, n);
    if (basis.rows != 22) throw error("build_S21: generators do not span rank 22");
    RatMat gram = basis * amb * basis.transpose();
    Lattice s = make_lattice(gram, "S(2,1)");

    auto rec = classify(s, 2);
    if (!rec.even || !rec.p_elementary || !rec.type_I)
        throw error("build_S21: classification failed (even/2-elementary/type I)");
    if (rec.signature != std::pair<int, int>{1, 21} || rec.discriminant != -4)
        throw error("build_S21: signature or discriminant wrong");

    // w_M = (1/3) sum (e_i + f_i)
    RatVec w(n, Rat(0));
    for (int i = 0; i < 21; ++i)
        for (int j = 0; j < n; ++j) w[j] += (evec(i)[j] + fvec[i][j]) / Rat(3);
    if (pair_with(amb, w, w) != 14) throw error("build_S21: w_M^2 != 14");
    for (int i = 0; i < 21; ++i) {
        if (pair_with(amb, w, evec(i)) != 1 || pair_with(amb, w, fvec[i]) != 1)
            throw error("build_S21: w_M pairing != 1");
    }

    // express everything in the S-basis
    RatMat bt = basis.transpose();
    auto to_s = [&](const RatVec& v) {
        auto sol = solve_rat(bt, v);
        if (!sol) throw error("build_S21: vector outside the model span");
        return *sol;
    };
    auto assert_integral = [](const RatVec& v, const char* what) {
        for (const auto& x : v)
            if (!is_integer(x)) throw error(std::string("build_S21: ") + what + " not in the lattice");
    };

    SurfaceLatticeModel m;
    m.lattice = s;
    RatVec ws = to_s(w);
    assert_integral(ws, "w_M");
    RatVec hs = to_s(h);
    assert_integral(hs, "h");
    m.classes["h"] = hs;
    m.class_order.push_back("h");
    m.classes["w_M"] = ws;
    m.class_order.push_back("w_M");
    for (int i = 0; i < 21; ++i) {
        RatVec es = to_s(evec(i));
        assert_integral(es, "e_i");
        std::string name = "e" + std::to_string(i + 1);
        m.classes[name] = es;
        m.class_order.push_back(name);
    }
    for (int j = 0; j < 21; ++j) {
        RatVec fs = to_s(fvec[j]);
        assert_integral(fs, "f_j");
        std::string name = "f" + std::to_string(j + 1);
        m.classes[name] = fs;
        m.class_order.push_back(name);
    }

    // the 168 Cremona classes c_I = h - (1/2) sum_{i in I} e_i
    auto sets = general_six_point_sets(plane);
    if (sets.size() != 168) throw error("build_S21: general six-point sets != 168");
    int idx = 0;
    for (const auto& set6 : sets) {
        RatVec c = h;
        for (int i : set6) c[1 + i] -= make_rat(1, 2);
        if (pair_with(amb, c, c) != -1) throw error("build_S21: c_I norm != -1");
        RatVec cs = to_s(c);
        // c_I lies in the dual: integral pairing with every basis vector
        for (int r = 0; r < 22; ++r) {
            Rat pr(0);
            for (int t = 0; t < 22; ++t) pr += gram(r, t) * cs[t];
            if (!is_integer(pr)) throw error("build_S21: c_I outside the dual");
        }
        std::string name = "c" + std::to_string(++idx);
        m.classes[name] = cs;
        m.class_order.push_back(name);
    }
    return m;
}

ChamberSpec chamber_S21(const SurfaceLatticeModel& m) {
    std::vector<RatVec> delta;
    for (int i = 1; i <= 21; ++i) delta.push_back(m.classes.at("e" + std::to_string(i)));
    for (int i = 1; i <= 21; ++i) delta.push_back(m.classes.at("f" + std::to_string(i)));
    for (int i = 1; i <= 168; ++i) delta.push_back(m.classes.at("c" + std::to_string(i)));
    return make_chamber(m.lattice, std::move(delta), m.classes.at("w_M"));
}

SurfaceLatticeModel build_S31() {
    // surface points of the Fermat quartic in P^3(F_9)
    std::vector<P3Point> pts;
    std::set<P3Point> seen;
    for (int a = 0; a < 9; ++a)
        for (int b = 0; b < 9; ++b)
            for (int c = 0; c < 9; ++c)
                for (int d = 0; d < 9; ++d) {
                    if (!a && !b && !c && !d) continue;
                    int s = f9_add(f9_add(f9_pow4(a), f9_pow4(b)), f9_add(f9_pow4(c), f9_pow4(d)));
                    if (s != 0) continue;
                    auto nrm = f9_normalize({a, b, c, d});
                    if (seen.insert(nrm).second) pts.push_back(nrm);
                }
    std::sort(pts.begin(), pts.end());
    std::map<P3Point, int> pt_index;
    for (size_t i = 0; i < pts.size(); ++i) pt_index[pts[i]] = static_cast<int>(i);

    // lines on the surface: spanned by two surface points, all 10 points on it
    std::set<std::vector<int>> lines_seen;
    std::vector<std::vector<int>> lines;  // each: sorted surface-point indices
    const int np = static_cast<int>(pts.size());
    for (int i = 0; i < np; ++i)
        for (int j = i + 1; j < np; ++j) {
            std::vector<int> line_pts;
            bool on_surface = true;
            // points p + t q for t in F9, plus q
            for (int t = 0; t < 9 && on_surface; ++t) {
                P3Point x;
                for (int k = 0; k < 4; ++k) x[k] = f9_add(pts[i][k], f9_mul(t, pts[j][k]));
                auto it = pt_index.find(f9_normalize(x));
                if (it == pt_index.end()) on_surface = false;
                else line_pts.push_back(it->second);
            }
            if (!on_surface) continue;
            line_pts.push_back(j);
            std::sort(line_pts.begin(), line_pts.end());
            line_pts.erase(std::unique(line_pts.begin(), line_pts.end()), line_pts.end());
            if (line_pts.size() != 10) throw error("build_S31: line without 10 points");
            if (lines_seen.insert(line_pts).second) lines.push_back(line_pts);
        }
    std::sort(lines.begin(), lines.end());
    const int nl = static_cast<int>(lines.size());
    if (nl != 112) throw error("build_S31: line count != 112");

    // intersection matrix: -2 self, 1 if the lines meet, 0 if skew
    IntMat pairing(nl, nl);
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) {
            if (i == j) {
                pairing(i, j) = -2;
                continue;
            }
            bool meet = false;
            const auto& a = lines[i];
            const auto& b = lines[j];
            size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] == b[y]) { meet = true; break; }
                if (a[x] < b[y]) ++x; else ++y;
            }
            pairing(i, j) = meet ? 1 : 0;
        }

    // greedy basis: 22 line classes with nondegenerate Gram
    std::vector<int> sel;
    for (int i = 0; i < nl && static_cast<int>(sel.size()) < 22; ++i) {
        sel.push_back(i);
        RatMat sub(static_cast<int>(sel.size()), static_cast<int>(sel.size()));
        for (size_t r = 0; r < sel.size(); ++r)
            for (size_t c = 0; c < sel.size(); ++c) sub(static_cast<int>(r), static_cast<int>(c)) = Rat(pairing(sel[r], sel[c]));
        if (rank_rat(sub) != static_cast<int>(sel.size())) sel.pop_back();
    }
    if (sel.size() != 22) throw error("build_S31: line classes do not span rank 22");
    RatMat gb(22, 22);
    for (int r = 0; r < 22; ++r)
        for (int c = 0; c < 22; ++c) gb(r, c) = Rat(pairing(sel[r], sel[c]));
    RatMat gb_inv = inverse(gb);

    // coordinates of every line in the chosen rational basis
    std::vector<RatVec> gens;
    for (int i = 0; i < nl; ++i) {
        RatVec pr(22);
        for (int r = 0; r < 22; ++r) pr[r] = Rat(pairing(i, sel[r]));
        gens.push_back(pr * gb_inv);
    }
    RatMat basis = integral_span_basis(gens, 22);
    if (basis.rows != 22) throw error("build_S31: span lost rank");
    RatMat gram = basis * gb * basis.transpose();
    Lattice s = make_lattice(gram, "S(3,1)");

    auto rec = classify(s, 3);
    if (!rec.even || !rec.p_elementary) throw error("build_S31: not even 3-elementary");
    if (rec.signature != std::pair<int, int>{1, 21} || rec.discriminant != -9)
        throw error("build_S31: signature or discriminant wrong");

    RatMat bt = basis.transpose();
    auto to_s = [&](const RatVec& v) {
        auto sol = solve_rat(bt, v);
        if (!sol) throw error("build_S31: vector outside the span");
        for (const auto& x : *sol)
            if (!is_integer(x)) throw error("build_S31: class not integral in the lattice");
        return *sol;
    };

    SurfaceLatticeModel m;
    m.lattice = s;
    std::vector<RatVec> line_classes(nl);
    for (int i = 0; i < nl; ++i) line_classes[i] = to_s(gens[i]);

    // h_FQ: a totally split hyperplane section (4 coplanar lines); search over
    // planes spanned by point triples is unnecessary -- scan hyperplanes via
    // their dual coordinates
    RatVec h;
    bool found = false;
    for (int a = 0; a < 9 && !found; ++a)
        for (int b = 0; b < 9 && !found; ++b)
            for (int c = 0; c < 9 && !found; ++c)
                for (int d = (a || b || c) ? 0 : 1; d < 9 && !found; ++d) {
                    if (!a && !b && !c && !d) continue;
                    // lines contained in the plane a x0 + b x1 + c x2 + d x3 = 0
                    std::vector<int> inplane;
                    for (int i = 0; i < nl; ++i) {
                        bool inside = true;
                        for (int t = 0; t < 2; ++t) {  // two spanning points suffice
                            const auto& pt = pts[lines[i][t]];
                            int sdot = f9_add(f9_add(f9_mul(a, pt[0]), f9_mul(b, pt[1])),
                                              f9_add(f9_mul(c, pt[2]), f9_mul(d, pt[3])));
                            if (sdot != 0) inside = false;
                        }
                        if (inside) inplane.push_back(i);
                    }
                    if (inplane.size() == 4) {
                        RatVec sum(22, Rat(0));
                        for (int i : inplane)
                            for (int j = 0; j < 22; ++j) sum[j] += line_classes[i][j];
                        h = sum;
                        found = true;
                    }
                }
    if (!found) throw error("build_S31: no totally split plane section found");

    if (pair_with(gram, h, h) != 4) throw error("build_S31: h_FQ^2 != 4");
    RatVec total(22, Rat(0));
    for (int i = 0; i < nl; ++i) {
        if (pair_with(gram, h, line_classes[i]) != 1)
            throw error("build_S31: <h_FQ, l_i> != 1");
        for (int j = 0; j < 22; ++j) total[j] += line_classes[i][j];
    }
    for (int j = 0; j < 22; ++j)
        if (total[j] != Rat(28) * h[j]) throw error("build_S31: 28 h_FQ != sum l_i");

    m.classes["h_FQ"] = h;
    m.class_order.push_back("h_FQ");
    for (int i = 0; i < nl; ++i) {
        std::string name = "l" + std::to_string(i + 1);
        m.classes[name] = line_classes[i];
        m.class_order.push_back(name);
    }
    return m;
}

}  // namespace latk
