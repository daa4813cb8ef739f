#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>

namespace critlab {

// Adaptive eighth-order Dormand-Prince (DOP853) integrator on a fixed-size
// state. Classic Hairer-Norsett-Wanner coefficients; the embedded 5th/3rd
// order pair drives the step controller. Steps can be clamped so the solver
// lands exactly on requested output points; with the smooth radial systems
// integrated here a clamped step is far below the accuracy-limited step, so
// sampling at grid nodes costs nothing.
template <std::size_t N>
class Dop853 {
 public:
  using State = std::array<double, N>;
  using Rhs = std::function<void(double, const State&, State&)>;
  /// Per-step observer; returning false stops the integration early.
  using Visitor = std::function<bool(double, const State&)>;

  explicit Dop853(Rhs rhs, double rtol = 1e-12, double atol = 1e-12)
      : rhs_(std::move(rhs)), rtol_(rtol), atol_(atol) {}

  /// Integrate from (t0, y0) to t1, calling visit(t, y) after every accepted
  /// step (including the initial point). Returns the final state.
  State integrate(double t0, const State& y0, double t1,
                  const Visitor& visit = {}) const {
    State y = y0;
    double t = t0;
    if (visit && !visit(t, y)) return y;
    if (t1 == t0) return y;
    const double dir = t1 > t0 ? 1.0 : -1.0;
    State k1;
    rhs_(t, y, k1);
    double h = dir * initial_step(t, y, k1);
    double err_old = 1e-4;
    int rejected = 0;
    for (long step = 0; step < kMaxSteps; ++step) {
      if ((t + 1.01 * h - t1) * dir > 0.0) h = t1 - t;
      State y_new, k_last;
      const double err = try_step(t, y, k1, h, y_new, k_last);
      if (err <= 1.0) {
        t += h;
        y = y_new;
        k1 = k_last;
        if (visit && !visit(t, y)) return y;
        if (dir * (t1 - t) <= 1e-14 * (std::abs(t) + 1.0)) return y;
        h *= step_factor(err, err_old, rejected > 0);
        err_old = std::max(err, 1e-4);
        rejected = 0;
      } else {
        h *= std::max(kFacMin, kSafety * std::pow(err, -kExponent));
        ++rejected;
        if (std::abs(h) < 1e-15 * (std::abs(t) + 1.0))
          throw std::runtime_error("Dop853: step size underflow");
      }
    }
    throw std::runtime_error("Dop853: step limit exceeded");
  }

  /// One accepted step of exactly size h from (t, y); no error control.
  /// Used for machine-accurate evaluation at nearby points, e.g. when
  /// polishing event locations inside a single step interval.
  State fixed_step(double t, const State& y, double h) const {
    State k1, y_new, k_last;
    rhs_(t, y, k1);
    try_step(t, y, k1, h, y_new, k_last);
    return y_new;
  }

 private:
  static constexpr long kMaxSteps = 16'000'000;
  static constexpr double kSafety = 0.9;
  static constexpr double kFacMin = 1.0 / 3.0;
  static constexpr double kFacMax = 6.0;
  static constexpr double kExponent = 1.0 / 8.0;

  double step_factor(double err, double err_old, bool was_rejected) const {
    double fac = kSafety * std::pow(err, -kExponent) *
                 std::pow(err_old, 0.0);  // beta = 0 controller
    fac = std::min(kFacMax, std::max(kFacMin, fac));
    if (was_rejected) fac = std::min(fac, 1.0);
    return fac;
  }

  double initial_step(double t, const State& y, const State& k1) const {
    // standard dimensional heuristic, refined by one explicit Euler probe
    double dnf = 0.0, dny = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sk = atol_ + rtol_ * std::abs(y[i]);
      dnf += (k1[i] / sk) * (k1[i] / sk);
      dny += (y[i] / sk) * (y[i] / sk);
    }
    double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);
    State y1, k2;
    for (std::size_t i = 0; i < N; ++i) y1[i] = y[i] + h * k1[i];
    rhs_(t + h, y1, k2);
    double der2 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sk = atol_ + rtol_ * std::abs(y[i]);
      const double d = (k2[i] - k1[i]) / sk;
      der2 += d * d;
    }
    der2 = std::sqrt(der2) / h;
    const double der12 = std::max(der2, std::sqrt(dnf));
    const double h1 = (der12 <= 1e-15) ? std::max(1e-6, h * 1e-3)
                                       : std::pow(0.01 / der12, 1.0 / 8.0);
    return std::min(100.0 * h, h1);
  }

  // Returns the scaled error estimate; fills y_new and the derivative at the
  // step end (FSAL-style reuse by the caller).
  double try_step(double t, const State& y, const State& k1, double h,
                  State& y_new, State& k_end) const {
    // clang-format off
    constexpr double c2=0.526001519587677318785587544488e-01, c3=0.789002279381515978178381316732e-01,
      c4=0.118350341907227396726757197510e+00, c5=0.281649658092772603273242802490e+00,
      c6=0.333333333333333333333333333333e+00, c7=0.25e+00, c8=0.307692307692307692307692307692e+00,
      c9=0.651282051282051282051282051282e+00, c10=0.6e+00, c11=0.857142857142857142857142857142e+00;
    constexpr double a21=5.26001519587677318785587544488e-2,
      a31=1.97250569845378994544595329183e-2, a32=5.91751709536136983633785987549e-2,
      a41=2.95875854768068491816892993775e-2, a43=8.87627564304205475450678981324e-2,
      a51=2.41365134159266685502369798665e-1, a53=-8.84549479328286085344864962717e-1,
      a54=9.24834003261792003115737966543e-1,
      a61=3.7037037037037037037037037037e-2, a64=1.70828608729473871279604482173e-1,
      a65=1.25467687566822425016691814123e-1,
      a71=3.7109375e-2, a74=1.70252211019544039314978060272e-1,
      a75=6.02165389804559606850219397283e-2, a76=-1.7578125e-2,
      a81=3.70920001185047927108779319836e-2, a84=1.70383925712239993810214054705e-1,
      a85=1.07262030446373284651809199168e-1, a86=-1.53194377486244017527936158236e-2,
      a87=8.27378916381402288758473766002e-3,
      a91=6.24110958716075717114429577812e-1, a94=-3.36089262944694129406857109825e0,
      a95=-8.68219346841726006818189891453e-1, a96=2.75920996994467083049415600797e1,
      a97=2.01540675504778934086186788979e1, a98=-4.34898841810699588477366255144e1,
      a101=4.77662536438264365890433908527e-1, a104=-2.48811461997166764192642586468e0,
      a105=-5.90290826836842996371446475743e-1, a106=2.12300514481811942347288949897e1,
      a107=1.52792336328824235832596922938e1, a108=-3.32882109689848629194453265587e1,
      a109=-2.03312017085086261358222928593e-2,
      a111=-9.3714243008598732571704021658e-1, a114=5.18637242884406370830023853209e0,
      a115=1.09143734899672957818500254654e0, a116=-8.14978701074692612513997267357e0,
      a117=-1.85200656599969598641566180701e1, a118=2.27394870993505042818970056734e1,
      a119=2.49360555267965238987089396762e0, a1110=-3.0467644718982195003823669022e0,
      a121=2.27331014751653820792359768449e0, a124=-1.05344954667372501984066689879e1,
      a125=-2.00087205822486249909675718444e0, a126=-1.79589318631187989172765950534e1,
      a127=2.79488845294199600508499808837e1, a128=-2.85899827713502369474065508674e0,
      a129=-8.87285693353062954433549289258e0, a1210=1.23605671757943030647266201528e1,
      a1211=6.43392746015763530355970484046e-1;
    constexpr double b1=5.42937341165687622380535766363e-2, b6=4.45031289275240888144113950566e0,
      b7=1.89151789931450038304281599044e0, b8=-5.8012039600105847814672114227e0,
      b9=3.1116436695781989440891606237e-1, b10=-1.52160949662516078556178806805e-1,
      b11=2.01365400804030348374776537501e-1, b12=4.47106157277725905176885569043e-2;
    constexpr double bhh1=0.244094488188976377952755905512e+00,
      bhh2=0.733846688281611857341361741547e+00, bhh3=0.220588235294117647058823529412e-01;
    constexpr double er1=0.1312004499419488073250102996e-01, er6=-0.1225156446376204440720569753e+01,
      er7=-0.4957589496572501915214079952e+00, er8=0.1664377182454986536961530415e+01,
      er9=-0.3503288487499736816886487290e+00, er10=0.3341791187130174790297318841e+00,
      er11=0.8192320648511571246570742613e-01, er12=-0.2235530786388629525884427845e-01;
    // clang-format on
    State k2, k3, k4, k5, k6, k7, k8, k9, k10, k11, k12, w;
    auto comb = [&](auto&&... terms) {
      for (std::size_t i = 0; i < N; ++i) w[i] = y[i] + h * (... + terms.apply(i));
    };
    struct Term {
      double c; const State* k;
      double apply(std::size_t i) const { return c * (*k)[i]; }
    };
    comb(Term{a21, &k1});
    rhs_(t + c2 * h, w, k2);
    comb(Term{a31, &k1}, Term{a32, &k2});
    rhs_(t + c3 * h, w, k3);
    comb(Term{a41, &k1}, Term{a43, &k3});
    rhs_(t + c4 * h, w, k4);
    comb(Term{a51, &k1}, Term{a53, &k3}, Term{a54, &k4});
    rhs_(t + c5 * h, w, k5);
    comb(Term{a61, &k1}, Term{a64, &k4}, Term{a65, &k5});
    rhs_(t + c6 * h, w, k6);
    comb(Term{a71, &k1}, Term{a74, &k4}, Term{a75, &k5}, Term{a76, &k6});
    rhs_(t + c7 * h, w, k7);
    comb(Term{a81, &k1}, Term{a84, &k4}, Term{a85, &k5}, Term{a86, &k6}, Term{a87, &k7});
    rhs_(t + c8 * h, w, k8);
    comb(Term{a91, &k1}, Term{a94, &k4}, Term{a95, &k5}, Term{a96, &k6}, Term{a97, &k7},
         Term{a98, &k8});
    rhs_(t + c9 * h, w, k9);
    comb(Term{a101, &k1}, Term{a104, &k4}, Term{a105, &k5}, Term{a106, &k6},
         Term{a107, &k7}, Term{a108, &k8}, Term{a109, &k9});
    rhs_(t + c10 * h, w, k10);
    comb(Term{a111, &k1}, Term{a114, &k4}, Term{a115, &k5}, Term{a116, &k6},
         Term{a117, &k7}, Term{a118, &k8}, Term{a119, &k9}, Term{a1110, &k10});
    rhs_(t + c11 * h, w, k11);
    comb(Term{a121, &k1}, Term{a124, &k4}, Term{a125, &k5}, Term{a126, &k6},
         Term{a127, &k7}, Term{a128, &k8}, Term{a129, &k9}, Term{a1210, &k10},
         Term{a1211, &k11});
    rhs_(t + h, w, k12);

    State bsum;
    for (std::size_t i = 0; i < N; ++i) {
      bsum[i] = b1 * k1[i] + b6 * k6[i] + b7 * k7[i] + b8 * k8[i] + b9 * k9[i] +
                b10 * k10[i] + b11 * k11[i] + b12 * k12[i];
      y_new[i] = y[i] + h * bsum[i];
    }
    rhs_(t + h, y_new, k_end);

    double err5 = 0.0, err3 = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sk =
          atol_ + rtol_ * std::max(std::abs(y[i]), std::abs(y_new[i]));
      double e3 = bsum[i] - bhh1 * k1[i] - bhh2 * k9[i] - bhh3 * k12[i];
      e3 /= sk;
      err3 += e3 * e3;
      double e5 = er1 * k1[i] + er6 * k6[i] + er7 * k7[i] + er8 * k8[i] +
                  er9 * k9[i] + er10 * k10[i] + er11 * k11[i] + er12 * k12[i];
      e5 /= sk;
      err5 += e5 * e5;
    }
    double deno = err5 + 0.01 * err3;
    if (deno <= 0.0) deno = 1.0;
    return std::abs(h) * err5 * std::sqrt(1.0 / (deno * N));
  }

  Rhs rhs_;
  double rtol_, atol_;
};

}  // namespace critlab
