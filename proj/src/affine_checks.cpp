#include <algorithm>
#include <functional>
#include <tuple>

#include "d4g2/affine.hpp"
#include "d4g2/linalg.hpp"

namespace d4g2 {

namespace {

const FieldLabel f1{1, false}, f2{2, false}, f3{3, false}, f4{4, false}, f1s{1, true}, f2s{2, true}, f3s{3, true},
    f4s{4, true};

std::string sector_name(Sector s) { return s == Sector::NS ? "NS" : "Ramond"; }

// A·s = B·s for every basis state s of depth ≤ max_depth
bool same_action(const OperatorSpec& a, const OperatorSpec& b, Sector sector, const Rational& max_depth,
                 std::string* where = nullptr) {
  for (const auto& s : enumerate_basis(sector, max_depth)) {
    FockVector v(s);
    if (a.apply(v) != b.apply(v)) {
      if (where) *where = s.str();
      return false;
    }
  }
  return true;
}

const SO8Element& named(const std::vector<std::pair<std::string, SO8Element>>& xs, const std::string& name) {
  for (const auto& [n, x] : xs)
    if (n == name) return x;
  throw std::out_of_range("missing basis element " + name);
}

void virasoro_family(Report& rep, const std::string& label, const Rational& c, int span, const Rational& max_depth,
                     const std::function<OperatorSpec(int, Sector)>& L) {
  for (Sector sec : {Sector::NS, Sector::Ramond}) {
    CheckResult agg = make_check(label + " satisfies the Virasoro bracket with c = " + c.str() + " (" + sector_name(sec) +
                                     ", depth <= " + max_depth.str() + ", m,n in [-" + std::to_string(span) + "," +
                                     std::to_string(span) + "])",
                                 true);
    long pairs = 0;
    for (int m = -span; m <= span && agg.pass; ++m)
      for (int n = -span; n <= span && agg.pass; ++n) {
        OperatorSpec expected = Rational(m - n) * L(m + n, sec);
        if (m + n == 0) expected.scalar += c * Rational(m * m * m - m, 12);
        auto r = commutator_check("", L(m, sec), L(n, sec), expected, sec, max_depth);
        if (!r.pass) {
          agg.pass = false;
          agg.note = "[L_" + std::to_string(m) + ", L_" + std::to_string(n) + "] " + r.note;
        }
        ++pairs;
      }
    agg.lhs = std::to_string(pairs) + " pairs";
    agg.scalar = c.str();
    rep.push_back(agg);
  }
}

using SectorOp = std::function<OperatorSpec(Sector)>;

CheckResult commute_all(const std::string& name, const std::vector<SectorOp>& as, const std::vector<SectorOp>& bs,
                        const Rational& max_depth) {
  CheckResult agg = make_check(name, true);
  long n = 0;
  for (Sector sec : {Sector::NS, Sector::Ramond})
    for (const auto& af : as)
      for (const auto& bf : bs) {
        OperatorSpec a = af(sec), b = bf(sec);
        auto r = commutator_check("", a, b, OperatorSpec(), sec, max_depth);
        ++n;
        if (!r.pass) {
          agg.pass = false;
          agg.note = "[" + a.name + ", " + b.name + "] on " + sector_name(sec) + ": " + r.note;
          return agg;
        }
      }
  agg.lhs = std::to_string(n) + " commutators";
  return agg;
}

}  // namespace

Report affine_checks(bool full) {
  Report rep;
  const int span = full ? 2 : 1;
  const Rational depth2(2), depth_small = full ? Rational(2) : Rational(3, 2);
  const Rational half(1, 2), seven10(7, 10);
  const auto& cv = conformal_vectors();
  const auto& bases = subalgebra_bases();

  {
    FockVector v = parse_state("a1(-1/2) a2(-1/2) a2*(-1/2) |0>");
    FockVector got = g2_simple_op(G2Root::beta1).apply(v);
    auto c = make_check("X_b1(0) on 122* gives -123*", got == -1 * parse_state("a1(-1/2) a2(-1/2) a3*(-1/2) |0>"));
    c.lhs = got.str();
    rep.push_back(c);
    FockVector w = g2_simple_op(G2Root::minus_theta).apply(parse_state("a1(-3/2) |0>"));
    c = make_check("X_-theta(1) on 1(-3/2) gives 2*(-1/2)", w == parse_state("a2*(-1/2) |0>"));
    c.lhs = w.str();
    rep.push_back(c);
  }

  {
    bool ok = true;
    std::string where;
    const std::pair<G2Root, std::string> roots[] = {{G2Root::beta1, "X_b1"}, {G2Root::beta2, "X_b2"}, {G2Root::minus_theta, "X_-2b1-3b2"}};
    for (const auto& [r, nm] : roots) {
      OperatorSpec op = g2_simple_op(r);
      int mode = r == G2Root::minus_theta ? 1 : 0;
      for (Sector sec : {Sector::NS, Sector::Ramond})
        if (!same_action(op, current(named(bases.g0, nm), mode), sec, depth2, &where)) ok = false;
    }
    auto c = make_check("G2 simple-root operators equal the affine currents of the finite G2 basis (both sectors, depth <= 2)", ok);
    c.note = where;
    rep.push_back(c);
  }

  {
    FockVector v = parse_state("a2(-1/2) a3(-1/2) a4(-1/2) |0>") + parse_state("a2(-1/2) a3(-1/2) a4*(-1/2) |0>") -
                   parse_state("a1(-1/2) a4(-1/2) a4*(-1/2) |0>");
    rep.push_back(make_check("L^1/2_0 (234 + 234* - 144*) = 1/2 (234 + 234* - 144*)",
                             coset_L(0, half, Sector::NS).apply(v) == half * v));
    FockVector r = FockVector::vacuum(Sector::Ramond);
    FockVector got = coset_L(0, seven10, Sector::Ramond).apply(r);
    auto c = make_check("L^7/10_0 |0'> = 3/80 |0'>", got == Rational(3, 80) * r);
    c.lhs = got.str();
    rep.push_back(c);
  }

  {
    FockVector b3 = sugawara_omega(dual_pairs(bases.b1), 5);
    FockVector g2 = sugawara_omega(dual_pairs(bases.g0), 4);
    auto c = make_check("Sugawara assembly over the B3 basis with h = 5 gives omega_D4 - 1/4 [44*]", b3 == cv.b3);
    c.lhs = b3.str();
    rep.push_back(c);
    c = make_check("Sugawara assembly over the G2 basis with h = 4 gives 1/5 (4 omega_D4 - [44*] + [11*22*] + [1*234] - [1*234*])",
                   g2 == cv.g2);
    c.lhs = g2.str();
    rep.push_back(c);
    FockVector d4 = sugawara_omega(dual_pairs([] {
                                     std::vector<std::pair<std::string, SO8Element>> all;
                                     for (int k = 0; k < SO8Element::basis_count(); ++k)
                                       all.emplace_back(std::to_string(k), SO8Element::basis(k));
                                     return all;
                                   }()),
                                   6);
    rep.push_back(make_check("Sugawara assembly over all of so(8) with h = 6 gives omega_D4", d4 == cv.d4));
    rep.push_back(make_check("omega_D4 = omega_B3 + omega_D4-B3 and omega_B3 = omega_G2 + omega_B3-G2",
                             cv.d4 == cv.b3 + cv.d4_b3 && cv.b3 == cv.g2 + cv.b3_g2));
  }

  {
    Rational d4 = delta_correction(cv.d4), db = delta_correction(cv.d4_b3), bg = delta_correction(cv.b3_g2);
    auto c = make_check("Ramond corrections: delta_correction gives 1/2, 1/16, 7/80 on omega_D4, omega_D4-B3, omega_B3-G2",
                        d4 == half && db == Rational(1, 16) && bg == Rational(7, 80));
    c.lhs = d4.str() + ", " + db.str() + ", " + bg.str();
    c.rhs = "1/2, 1/16, 7/80";
    rep.push_back(c);
    c = make_check("delta corrections equal the scalar parts of the Ramond L_0 operators",
                   full_L(0, Sector::Ramond).scalar == d4 && coset_L(0, half, Sector::Ramond).scalar == db &&
                       coset_L(0, seven10, Sector::Ramond).scalar == bg);
    c.note = "C_{0,1} = " + delta_coefficient(0, 1).str() + ", C_{1,0} = " + delta_coefficient(1, 0).str() +
             ", C_{0,0} = " + delta_coefficient(0, 0).str();
    rep.push_back(c);
  }

  {
    bool ok = true;
    std::string where;
    for (Sector sec : {Sector::NS, Sector::Ramond})
      for (int k = -span; k <= span; ++k) {
        if (!same_action(vertex_operator(cv.d4, k, sec), full_L(k, sec), sec, depth2, &where)) ok = false;
        if (!same_action(vertex_operator(cv.d4_b3, k, sec), coset_L(k, half, sec), sec, depth2, &where)) ok = false;
        if (!same_action(vertex_operator(cv.b3_g2, k, sec), coset_L(k, seven10, sec), sec, depth2, &where)) ok = false;
      }
    auto c = make_check("modes of Y(omega) for omega_D4, omega_D4-B3, omega_B3-G2 equal the explicit L families (both sectors)", ok);
    c.note = where;
    rep.push_back(c);
  }

  {
    bool ok = true;
    for (Sector sec : {Sector::NS, Sector::Ramond})
      for (const auto& s : enumerate_basis(sec, Rational(3)))
        if (full_L(0, sec).apply(FockVector(s)) != depth(s) * FockVector(s)) ok = false;
    rep.push_back(make_check("L_0 acts on every basis state of depth <= 3 by its depth (both sectors)", ok));
  }

  virasoro_family(rep, "L (D4)", Rational(4), span, depth_small, [](int k, Sector s) { return full_L(k, s); });
  virasoro_family(rep, "L^1/2", half, span, depth_small, [&](int k, Sector s) { return coset_L(k, half, s); });
  virasoro_family(rep, "L^7/10", seven10, span, depth_small, [&](int k, Sector s) { return coset_L(k, seven10, s); });

  auto family = [&](const Rational& c) {
    std::vector<std::function<OperatorSpec(Sector)>> out;
    for (int k = -span; k <= span; ++k) out.push_back([k, c](Sector s) { return coset_L(k, c, s); });
    return out;
  };
  {
    rep.push_back(commute_all("[L^1/2_m, L^7/10_n] = 0 (both sectors, depth <= " + depth_small.str() + ")", family(half),
                              family(seven10), depth_small));
  }

  {
    std::vector<SectorOp> g2ops;
    for (G2Root r : {G2Root::beta1, G2Root::beta2, G2Root::minus_theta}) g2ops.push_back([r](Sector) { return g2_simple_op(r); });
    for (const auto& [c, nm] : {std::pair{half, std::string("L^1/2")}, std::pair{seven10, std::string("L^7/10")}}) {
      rep.push_back(commute_all(nm + " commutes with the three G2 simple-root operators (both sectors, depth <= " +
                                    depth_small.str() + ")",
                                family(c), g2ops, depth_small));
    }
  }

  {
    auto currents = [](const std::vector<std::pair<std::string, SO8Element>>& basis) {
      std::vector<OperatorSpec> out;
      for (const auto& [n, x] : basis)
        for (int m : {-1, 0, 1}) out.push_back(current(x, m, n));
      return out;
    };
    const Rational d = full ? Rational(2) : Rational(1);
    for (const auto& [c, nm, basis, bn] :
         {std::tuple{half, std::string("L^1/2"), bases.b1, std::string("B3")},
          std::tuple{seven10, std::string("L^7/10"), bases.g0, std::string("G2")}}) {
      CheckResult agg = make_check(nm + "_k, k in [-1,1], commutes with every " + bn + " current at modes 0, +-1 (depth <= " + d.str() + ")", true);
      for (Sector sec : {Sector::NS, Sector::Ramond}) {
        std::vector<OperatorSpec> lk;
        for (int k = -1; k <= 1; ++k) lk.push_back(coset_L(k, c, sec));
        auto cur = currents(basis);
        for (const auto& l : lk)
          for (const auto& x : cur) {
            auto r = commutator_check("", l, x, OperatorSpec(), sec, d);
            if (!r.pass && agg.pass) {
              agg.pass = false;
              agg.note = "[" + l.name + ", " + x.name + "] on " + sector_name(sec) + ": " + r.note;
            }
          }
      }
      rep.push_back(agg);
    }
  }

  {
    auto b3 = dual_pairs(bases.b1), g2 = dual_pairs(bases.g0);
    bool db = true, bg = true;
    std::string where;
    const Rational d = full ? Rational(2) : Rational(1);
    for (Sector sec : {Sector::NS, Sector::Ramond})
      for (int k = -1; k <= 1; ++k)
        for (const auto& s : enumerate_basis(sec, d)) {
          FockVector v(s);
          FockVector lb3 = sugawara_L(b3, 5, k, v);
          if (full_L(k, sec).apply(v) != lb3 + coset_L(k, half, sec).apply(v)) {
            db = false;
            where = s.str();
          }
          if (lb3 != sugawara_L(g2, 4, k, v) + coset_L(k, seven10, sec).apply(v)) {
            bg = false;
            where = s.str();
          }
        }
    auto c = make_check("L^D4_k = L^B3_k + L^1/2_k with L^B3 the Sugawara operators of the B3 basis (k in [-1,1], both sectors)", db);
    c.note = where;
    rep.push_back(c);
    c = make_check("L^B3_k = L^G2_k + L^7/10_k with L^G2 the Sugawara operators of the G2 basis (k in [-1,1], both sectors)", bg);
    c.note = where;
    rep.push_back(c);
  }

  append(rep, sigma_hat_checks(full));
  return rep;
}

Report sigma_hat_checks(bool full) {
  Report rep;
  const auto& sh = sigma_hat_boxed();
  const auto& cv = conformal_vectors();
  const std::size_t n = sh.vectors.size();
  {
    Matrix<Rational> m;
    std::vector<FockState> rows;
    for (const auto& x : sh.vectors)
      for (const auto& [s, c] : x.terms()) rows.push_back(s);
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (const auto& s : rows) {
      std::vector<Rational> row;
      for (const auto& x : sh.vectors) row.push_back(x.coeff(s));
      m.push_back(row);
    }
    rep.push_back(make_check("the seven spanning vectors of the sigma-hat table are linearly independent", rank(m) == n));
  }
  bool cube = true, fixes = sh.apply(cv.d4) == cv.d4;
  for (const auto& x : sh.vectors)
    if (sh.apply(x, 3) != x) cube = false;
  rep.push_back(make_check("sigma-hat^3 = id on the span", cube));
  rep.push_back(make_check("sigma-hat fixes omega_D4", fixes));

  const FockVector b44 = boxed(Boxed::b44s), b11 = boxed(Boxed::b11s22s), b22 = boxed(Boxed::b22s44s),
                   b1234 = boxed(Boxed::b1s234), b1234s = boxed(Boxed::b1s234s), w = cv.d4;
  const FockVector p = pair_vector(f4, f4s) + pair_vector(f4s, f4), q = pair_vector(f4, f4) + pair_vector(f4s, f4s);
  const Rational h(1, 2);
  {
    std::vector<std::pair<FockVector, FockVector>> listed = {
        {b44, h * w - h * b11 + h * b22 - b1234}, {b11, h * w - p + h * b11 + h * b22},
        {b22, h * w - p - h * b11 - h * b22},     {b1234, -1 * b1234s},
        {b1234s, q},                              {q, -1 * b1234}};
    bool ok = true;
    for (const auto& [x, y] : listed)
      if (sh.apply(x, 2) != y) ok = false;
    rep.push_back(make_check("composing the listed sigma-hat images reproduces the listed sigma-hat^2 images", ok));
  }
  {
    const Rational e(1, 8), f(1, 4), t(3, 40), fifth(1, 5), tw(1, 20);
    FockVector s_db = e * w - e * b11 - e * b22 + f * b1234s;
    FockVector s2_db = e * w - e * b11 + e * b22 - f * b1234;
    FockVector s_bg = t * w + fifth * b44 - t * b11 + e * b22 - fifth * b1234 - tw * b1234s;
    FockVector s2_bg = t * w + fifth * b44 - t * b11 - e * b22 + tw * b1234 + fifth * b1234s;
    bool ok = sh.apply(cv.d4_b3) == s_db && sh.apply(cv.d4_b3, 2) == s2_db && sh.apply(cv.b3_g2) == s_bg &&
              sh.apply(cv.b3_g2, 2) == s2_bg;
    rep.push_back(make_check("sigma-hat images of omega_D4-B3 and omega_B3-G2 match the displayed coefficients", ok));

    const Rational two(2), three(3), five(5), eight(8);
    bool scaled = eight * sh.apply(cv.d4_b3) == w - b11 - b22 + two * b1234s &&
                  eight * sh.apply(cv.d4_b3, 2) == w - b11 + b22 - two * b1234 &&
                  Rational(40) * sh.apply(cv.b3_g2) == three * w + eight * b44 - three * b11 + five * b22 - eight * b1234 - two * b1234s &&
                  Rational(40) * sh.apply(cv.b3_g2, 2) == three * w + eight * b44 - three * b11 - five * b22 + two * b1234 + eight * b1234s;
    auto c = make_check("scaled twisted coset vectors reproduce the coefficients of the displayed operator combinations (8 Y, 40 Y)", scaled);
    rep.push_back(c);

    bool g2fixed = true;
    for (int i = 1; i <= 2; ++i)
      if (w - sh.apply(cv.d4_b3, i) - sh.apply(cv.b3_g2, i) != cv.g2) g2fixed = false;
    rep.push_back(make_check("omega_D4 minus the twisted coset vectors is omega_G2 for both powers", g2fixed));
  }

  if (full) {
    bool ok = true;
    std::string note;
    for (int i = 1; i <= 2 && ok; ++i) {
      FockVector db = sh.apply(cv.d4_b3, i), bg = sh.apply(cv.b3_g2, i);
      for (int m = -1; m <= 1 && ok; ++m)
        for (int nn = -1; nn <= 1 && ok; ++nn)
          for (const auto& [vec, c] : {std::pair{db, Rational(1, 2)}, std::pair{bg, Rational(7, 10)}}) {
            OperatorSpec expected = Rational(m - nn) * vertex_operator(vec, m + nn, Sector::NS);
            if (m + nn == 0) expected.scalar += c * Rational(m * m * m - m, 12);
            auto r = commutator_check("", vertex_operator(vec, m, Sector::NS), vertex_operator(vec, nn, Sector::NS),
                                      expected, Sector::NS, Rational(3, 2));
            if (!r.pass) {
              ok = false;
              note = r.note;
            }
          }
    }
    auto c = make_check("twisted coset operators satisfy the Virasoro bracket with c = 1/2 and 7/10 (NS, depth <= 3/2, m,n in [-1,1])", ok);
    c.note = note;
    rep.push_back(c);
  }
  return rep;
}

}  // namespace d4g2
