#include "appell/verify.hpp"

#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "appell/appell_vector.hpp"
#include "appell/errors.hpp"
#include "appell/matrix.hpp"
#include "appell/oracles.hpp"

namespace appell::verify {

namespace {

// A check body returns nullopt on success, or a description of the first
// counterexample.
using Outcome = std::optional<std::string>;

struct Recorder {
  std::vector<CheckResult>& out;
  std::string subject;

  void run(std::string identity, std::string anchor, std::string detail,
           const std::function<Outcome()>& body) {
    CheckResult r{std::move(identity), std::move(anchor), subject, Status::Pass, std::move(detail)};
    try {
      if (auto failure = body()) {
        r.status = Status::Fail;
        r.detail = *failure;
      }
    } catch (const AppellError& e) {
      r.status = Status::Fail;
      r.detail = std::string(to_string(e.kind())) + ": " + e.what();
    }
    out.push_back(std::move(r));
  }

  void not_applicable(std::string identity, std::string anchor, std::string why) {
    out.push_back(CheckResult{std::move(identity), std::move(anchor), subject,
                              Status::NotApplicable, std::move(why)});
  }
};

std::string at_m(std::size_t m) { return "m=" + std::to_string(m); }

std::string range_m(std::size_t m_max) { return "m=0.." + std::to_string(m_max); }

std::string samples(std::size_t count, std::size_t m) {
  return std::to_string(count) + " samples, m=" + std::to_string(m);
}

Outcome mismatch(const std::string& where, const RatVector& got, const RatVector& want) {
  return where + ": " + to_string(got) + " != " + to_string(want);
}

Outcome first_matrix_difference(const LTMatrix& got, const LTMatrix& want,
                                const std::string& where) {
  if (got.order() != want.order()) return where + ": order mismatch";
  for (std::size_t i = 0; i < got.order(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (got(i, j) != want(i, j)) {
        return where + ": entry (" + std::to_string(i) + "," + std::to_string(j) + ") " +
               got(i, j).str() + " != " + want(i, j).str();
      }
    }
  }
  return std::nullopt;
}

LTMatrix leading_block(const LTMatrix& a, std::size_t order) {
  LTMatrix out(order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j <= i; ++j) out.set(i, j, a(i, j));
  }
  return out;
}

RatVector sine_coefficients(std::size_t m) {
  // sin t = sum (-1)^k t^{2k+1}/(2k+1)!, so c_{2k+1} = (-1)^k.
  RatVector c(m + 1);
  for (std::size_t n = 1; n <= m; n += 2) c[n] = ((n / 2) % 2 == 0) ? Rat(1) : Rat(-1);
  return c;
}

std::optional<oracles::ClassicalFamily> classical_of(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::HermiteMonic: return oracles::ClassicalFamily::Hermite;
    case FamilyKind::LaguerreModified: return oracles::ClassicalFamily::Laguerre;
    case FamilyKind::LegendreModified: return oracles::ClassicalFamily::Legendre;
    case FamilyKind::ChebyshevFirstModified: return oracles::ClassicalFamily::Chebyshev1;
    case FamilyKind::ChebyshevSecondModified: return oracles::ClassicalFamily::Chebyshev2;
    default: return std::nullopt;
  }
}

}  // namespace

Rat RationalSampler::next() { return Rat(uniform(-99, 99), uniform(1, 20)); }

Rat RationalSampler::next_nonzero() {
  for (;;) {
    Rat r = next();
    if (!r.is_zero()) return r;
  }
}

Rat RationalSampler::next_open_unit() {
  const long den = uniform(2, 20);
  return Rat(uniform(-(den - 1), den - 1), den);
}

std::vector<Rat> RationalSampler::take(std::size_t count) {
  std::vector<Rat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

std::vector<Rat> RationalSampler::take_open_unit(std::size_t count) {
  std::vector<Rat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next_open_unit());
  return out;
}

long RationalSampler::uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

const char* to_string(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotApplicable: return "N/A";
  }
  return "?";
}

bool Report::passed() const { return count(Status::Fail) == 0; }

std::size_t Report::count(Status status) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == status ? 1 : 0;
  return n;
}

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == Status::Fail) return &c;
  }
  return nullptr;
}

std::vector<FamilySpec> default_families() {
  std::vector<FamilySpec> out;
  for (FamilyKind kind : all_family_kinds()) {
    switch (kind) {
      case FamilyKind::LaguerreModified:
        out.push_back(FamilySpec::laguerre_modified(Rat(1, 2)));
        break;
      case FamilyKind::GeneralizedEuler:
        out.push_back(FamilySpec::generalized_euler(Rat(1, 3)));
        break;
      case FamilyKind::Custom:
        break;
      default:
        out.push_back(FamilySpec::simple(kind));
    }
  }
  return out;
}

std::vector<CheckResult> kernel_checks(std::size_t m_max, RationalSampler& sampler,
                                       const Options& options) {
  std::vector<CheckResult> out;
  Recorder rec{out, "kernel"};
  const std::size_t m = m_max;
  const std::size_t n_pairs = options.point_samples;

  rec.run("nilpotency", "H^s = 0 for s = m+1, m+2", range_m(m_max), [&]() -> Outcome {
    for (std::size_t k = 0; k <= m_max; ++k) {
      const LTMatrix h = creation_matrix(k);
      const auto s = static_cast<unsigned>(k + 1);
      if (!mat_pow(h, s).is_zero() || !mat_pow(h, s + 1).is_zero()) {
        return "H^(m+1) != 0 at " + at_m(k);
      }
      if (k > 0 && mat_pow(h, s - 1).is_zero()) return "H^m == 0 at " + at_m(k);
    }
    return std::nullopt;
  });

  const std::vector<Rat> xs = sampler.take(n_pairs);
  const std::vector<Rat> ys = sampler.take(n_pairs);

  rec.run("pascal-group-law", "P(x) P(y) = P(x+y)", samples(n_pairs, m), [&]() -> Outcome {
    for (std::size_t s = 0; s < n_pairs; ++s) {
      auto diff = first_matrix_difference(pascal_generalized(m, xs[s]) * pascal_generalized(m, ys[s]),
                                          pascal_generalized(m, xs[s] + ys[s]),
                                          "x=" + xs[s].str() + " y=" + ys[s].str());
      if (diff) return diff;
    }
    return std::nullopt;
  });

  rec.run("exponential", "sum x^n H^n/n! = P(x)", samples(n_pairs, m), [&]() -> Outcome {
    for (const Rat& x : xs) {
      const RatVector powers = monomial_vector(m, x);
      if (auto d = first_matrix_difference(series_of_H(powers, m), pascal_generalized(m, x),
                                           "x=" + x.str())) {
        return d;
      }
    }
    return std::nullopt;
  });

  rec.run("series-closed-form", "sum c_n H^n/n! = [C(i,j) c_{i-j}]", samples(n_pairs, m),
          [&]() -> Outcome {
            for (std::size_t s = 0; s < n_pairs; ++s) {
              const RatVector c = sampler.take(m + 1);
              if (auto d = first_matrix_difference(series_of_H(c, m),
                                                   series_of_H_closed_form(c, m),
                                                   "c=" + to_string(c))) {
                return d;
              }
            }
            return std::nullopt;
          });

  rec.run("pascal-conjugation", "P(-x) = D[-1] P(x) D[-1]", samples(n_pairs, m), [&]() -> Outcome {
    const LTMatrix flip = diag_geometric(m, Rat(-1));
    for (const Rat& x : xs) {
      if (auto d = first_matrix_difference(pascal_generalized(m, -x),
                                           flip * pascal_generalized(m, x) * flip,
                                           "x=" + x.str())) {
        return d;
      }
    }
    return std::nullopt;
  });

  rec.run("triangular-inverse", "A A^{-1} = A^{-1} A = I", samples(n_pairs, m), [&]() -> Outcome {
    const LTMatrix id = LTMatrix::identity(m + 1);
    for (std::size_t s = 0; s < n_pairs; ++s) {
      LTMatrix a = LTMatrix::identity(m + 1);
      for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 0; j < i; ++j) a.set(i, j, sampler.next());
      }
      const LTMatrix inv = lt_inverse(a);
      if (auto d = first_matrix_difference(a * inv, id, "A A^{-1}")) return d;
      if (auto d = first_matrix_difference(inv * a, id, "A^{-1} A")) return d;
    }
    return std::nullopt;
  });

  return out;
}

std::vector<CheckResult> family_checks(const FamilySpec& spec, std::size_t m_max,
                                       RationalSampler& sampler, const Options& options) {
  std::vector<CheckResult> out;
  Recorder rec{out, spec.label()};
  const std::size_t m = m_max;
  const std::size_t n_pairs = options.pair_samples;
  const std::size_t n_points = options.point_samples;
  const FamilyKind kind = spec.kind();

  const AppellVector av = appell_vector(spec, m);
  const TransferMatrix& tm = av.transfer();
  const LTMatrix& mat = tm.matrix;
  const LTMatrix h = creation_matrix(m);

  // Points are drawn up front so the sampler stream does not depend on which
  // checks end up applicable.
  const std::vector<Rat> xs = sampler.take(n_pairs);
  const std::vector<Rat> ys = sampler.take(n_pairs);
  std::vector<Rat> scales;
  for (std::size_t s = 0; s < n_pairs; ++s) scales.push_back(sampler.next_nonzero());
  std::vector<Rat> points = sampler.take(n_points);
  points.front() = Rat(0);
  const std::vector<Rat> unit_points = sampler.take_open_unit(n_points);

  rec.run("closed-form", "f(H) = [C(i,j) c_{i-j}]", range_m(m_max), [&]() -> Outcome {
    for (std::size_t k = 0; k <= m_max; ++k) {
      const TransferMatrix t = transfer_matrix(spec, k);
      if (auto d = first_matrix_difference(t.matrix, series_of_H_closed_form(t.coeffs, k),
                                           at_m(k) + " closed form")) {
        return d;
      }
      if (auto d = first_matrix_difference(t.matrix, series_of_H(t.coeffs, k),
                                           at_m(k) + " power series")) {
        return d;
      }
    }
    return std::nullopt;
  });

  rec.run("prefix", "M(m) = leading block of M(m_max)", range_m(m_max), [&]() -> Outcome {
    for (std::size_t k = 0; k <= m_max; ++k) {
      if (auto d = first_matrix_difference(transfer_matrix(spec, k).matrix,
                                           leading_block(mat, k + 1), at_m(k))) {
        return d;
      }
    }
    return std::nullopt;
  });

  rec.run("appell-ode", "d/dx p(x) = H p(x)", range_m(m_max), [&]() -> Outcome {
    for (std::size_t k = 0; k <= m_max; ++k) {
      const AppellVector v = appell_vector(spec, k);
      if (auto d = first_matrix_difference(derivative(v).coefficients(),
                                           creation_matrix(k) * v.matrix(), at_m(k))) {
        return d;
      }
    }
    return std::nullopt;
  });

  rec.run("commutation", "M H = H M, M P(x) = P(x) M", samples(n_points, m), [&]() -> Outcome {
    if (auto d = first_matrix_difference(mat * h, h * mat, "H")) return d;
    for (const Rat& x : points) {
      const LTMatrix p = pascal_generalized(m, x);
      if (auto d = first_matrix_difference(mat * p, p * mat, "x=" + x.str())) return d;
    }
    return std::nullopt;
  });

  rec.run("degree", tm.invertible() ? "deg p_n = n, leading coefficient c_0"
                                    : "deg p_n < n (zero diagonal)",
          at_m(m), [&]() -> Outcome {
            for (std::size_t n = 0; n <= m; ++n) {
              if (mat(n, n) != tm.coeffs.front()) {
                return "diagonal entry " + std::to_string(n) + " = " + mat(n, n).str() +
                       " != c_0 = " + tm.coeffs.front().str();
              }
            }
            return std::nullopt;
          });

  rec.run("translation", "p(x+y) = P(y) p(x)", samples(n_pairs, m), [&]() -> Outcome {
    for (std::size_t s = 0; s < n_pairs; ++s) {
      const RatVector got = translate(av, ys[s], xs[s]);
      const RatVector want = evaluate(av, xs[s] + ys[s]);
      if (got != want) return mismatch("x=" + xs[s].str() + " y=" + ys[s].str(), got, want);
    }
    return std::nullopt;
  });

  rec.run("forward-difference", "p(x+1) - p(x) = (P - I) p(x)", samples(n_points, m),
          [&]() -> Outcome {
            for (const Rat& x : points) {
              const RatVector got = forward_difference(av, x);
              const RatVector a = evaluate(av, x + Rat(1));
              const RatVector b = evaluate(av, x);
              RatVector want(a.size());
              for (std::size_t i = 0; i < a.size(); ++i) want[i] = a[i] - b[i];
              if (got != want) return mismatch("x=" + x.str(), got, want);
            }
            return std::nullopt;
          });

  rec.run("multiplication", "p(ax) = P((a-1)x) p(x) = M D[a] xi(x)", samples(n_pairs, m),
          [&]() -> Outcome {
            for (std::size_t s = 0; s < n_pairs; ++s) {
              const Rat& a = scales[s];
              const Rat& x = xs[s];
              const RatVector direct = scale_argument(av, a, x, ScaleRoute::Direct);
              const RatVector pascal = scale_argument(av, a, x, ScaleRoute::Pascal);
              const RatVector diag = scale_argument(av, a, x, ScaleRoute::Diagonal);
              const std::string where = "a=" + a.str() + " x=" + x.str();
              if (pascal != direct) return mismatch(where + " pascal route", pascal, direct);
              if (diag != direct) return mismatch(where + " diagonal route", diag, direct);
            }
            return std::nullopt;
          });

  if (tm.invertible()) {
    rec.run("inverse-coefficients", "sum gamma_k H^k/k! = M^{-1}", range_m(m_max),
            [&]() -> Outcome {
              for (std::size_t k = 0; k <= m_max; ++k) {
                const TransferMatrix t = transfer_matrix(spec, k);
                const LTMatrix inv = series_of_H(gamma_from_coefficients(t.coeffs), k);
                if (auto d = first_matrix_difference(inv * t.matrix, LTMatrix::identity(k + 1),
                                                     at_m(k) + " gamma(H) M")) {
                  return d;
                }
                if (auto d = first_matrix_difference(lt_inverse(t.matrix), inv,
                                                     at_m(k) + " forward substitution")) {
                  return d;
                }
              }
              return std::nullopt;
            });
    rec.run("general-recurrence",
            "p_n(x) = (x^n - sum C(n,k) gamma_{n-k} p_k(x)) / gamma_0", samples(n_points, m),
            [&]() -> Outcome {
              const RatVector gamma = gamma_from_coefficients(tm.coeffs);
              for (const Rat& x : points) {
                const RatVector got = recurrence_eval_from_gamma(gamma, x);
                const RatVector want = evaluate(av, x);
                if (got != want) return mismatch("x=" + x.str(), got, want);
              }
              return std::nullopt;
            });
  } else {
    rec.not_applicable("inverse-coefficients", "sum gamma_k H^k/k! = M^{-1}",
                       "c_0 = 0, transfer matrix singular");
    rec.not_applicable("general-recurrence",
                       "p_n(x) = (x^n - sum C(n,k) gamma_{n-k} p_k(x)) / gamma_0",
                       "c_0 = 0, no gamma sequence");
    rec.run("singular-boundary", "c_0 = 0 makes M singular", at_m(m), [&]() -> Outcome {
      try {
        (void)lt_inverse(mat);
        return Outcome("lt_inverse accepted a zero diagonal");
      } catch (const AppellError& e) {
        if (e.kind() != ErrorKind::SingularMatrix || e.index() != std::size_t{0}) {
          return Outcome(std::string("unexpected error: ") + e.what());
        }
      }
      try {
        (void)gamma_from_coefficients(tm.coeffs);
        return Outcome("gamma recurrence accepted c_0 = 0");
      } catch (const AppellError& e) {
        if (e.kind() != ErrorKind::NotInvertible) return Outcome(e.what());
      }
      return std::nullopt;
    });
  }

  rec.run("reflection", "p(-x) = D[-1] p(x) <=> c_{2n+1} = 0 <=> gamma_{2n+1} = 0",
          samples(n_points, m), [&]() -> Outcome {
            const bool odd_vanish = odd_coeffs_vanish(tm.coeffs);
            const LTMatrix flip = diag_geometric(m, Rat(-1));
            bool reflects = true;
            for (const Rat& x : points) {
              if (evaluate(av, -x) != flip * evaluate(av, x)) {
                reflects = false;
                break;
              }
            }
            if (reflects != odd_vanish) {
              return std::string("reflection ") + (reflects ? "holds" : "fails") +
                     " but odd coefficients " + (odd_vanish ? "vanish" : "do not vanish");
            }
            if (is_even_family(kind) && !odd_vanish) return Outcome("even family has odd c_n");
            return std::nullopt;
          });

  if (kind == FamilyKind::Bernoulli || kind == FamilyKind::Euler ||
      kind == FamilyKind::Monomial) {
    // x^1 breaks the identity; at m = 0 only the constant 1 remains
    const bool expected = kind != FamilyKind::Monomial || m == 0;
    rec.run("symmetry", "p(1-x) = D[-1] p(x) <=> p(1) = D[-1] p(0)", samples(n_points, m),
            [&]() -> Outcome {
              const bool holds = symmetry_holds(av, Rat(1), points);
              if (holds != expected) {
                return std::string("symmetry_holds returned ") + (holds ? "true" : "false");
              }
              return std::nullopt;
            });
  }

  // Known gamma sequences.
  if (kind == FamilyKind::Bernoulli || kind == FamilyKind::Euler ||
      kind == FamilyKind::HermiteMonic || kind == FamilyKind::GeneralizedEuler) {
    rec.run("gamma-sequence", "known gamma_k", at_m(m), [&]() -> Outcome {
      RatVector want(m + 1);
      for (std::size_t k = 0; k <= m; ++k) {
        switch (kind) {
          case FamilyKind::Bernoulli:
            want[k] = Rat(1, static_cast<long>(k + 1));
            break;
          case FamilyKind::Euler:
            want[k] = k == 0 ? Rat(1) : Rat(1, 2);
            break;
          case FamilyKind::HermiteMonic: {
            // M^{-1} = e^{H^2/4}: gamma_{2n} = (2n)! / (4^n n!), odd ones vanish.
            const auto n = static_cast<unsigned>(k / 2);
            want[k] = k % 2 == 0 ? factorial(2 * n) / (Rat(4).pow(n) * factorial(n)) : Rat(0);
            break;
          }
          default:
            want[k] = k == 0 ? Rat(1) : *spec.gamma_bar();
        }
      }
      const RatVector got = gamma_coefficients(spec, m);
      if (got != want) return mismatch("gamma", got, want);
      return std::nullopt;
    });
  }

  // Independent oracles.
  if (kind == FamilyKind::Bernoulli || kind == FamilyKind::Genocchi) {
    rec.run("oracle-numbers",
            kind == FamilyKind::Bernoulli ? "c_n = B_n" : "c_n = G_n = 2(1-2^n) B_n",
            range_m(m_max), [&]() -> Outcome {
              const RatVector want = kind == FamilyKind::Bernoulli
                                         ? oracles::bernoulli_numbers(m)
                                         : oracles::genocchi_numbers(m);
              if (tm.coeffs != want) return mismatch("coefficients", tm.coeffs, want);
              return std::nullopt;
            });
  }
  if (kind == FamilyKind::Euler) {
    rec.run("oracle-series-division", "p(x) = E(x) from 2e^{xt}/(e^t+1)",
            samples(n_points, m), [&]() -> Outcome {
              for (const Rat& x : points) {
                const RatVector got = evaluate(av, x);
                const RatVector want = oracles::euler_poly_values(m, x);
                if (got != want) return mismatch("x=" + x.str(), got, want);
              }
              return std::nullopt;
            });
  }
  if (auto classical = classical_of(kind)) {
    const bool needs_unit = *classical == oracles::ClassicalFamily::Legendre ||
                            *classical == oracles::ClassicalFamily::Chebyshev1 ||
                            *classical == oracles::ClassicalFamily::Chebyshev2;
    const std::vector<Rat>& at = needs_unit ? unit_points : points;
    rec.run("oracle-classical", "classical reconstruction = three-term recurrence",
            samples(at.size(), m), [&]() -> Outcome {
              for (const Rat& x : at) {
                RatVector got;
                RatVector want;
                switch (kind) {
                  case FamilyKind::HermiteMonic:
                    got = classical_hermite(m, x);
                    want = oracles::three_term(*classical, m, x);
                    break;
                  case FamilyKind::LaguerreModified: {
                    const Rat& alpha = *spec.alpha();
                    const LaguerreValues lv = classical_laguerre(m, alpha, x);
                    got = lv.generalized;
                    want = oracles::three_term(*classical, m, x, alpha);
                    // L_n^(alpha-n)(x) from its own recurrence
                    RatVector ladder_want(m + 1);
                    for (std::size_t n = 0; n <= m; ++n) {
                      ladder_want[n] = oracles::three_term(*classical, n, x,
                                                           alpha - Rat(static_cast<long>(n)))[n];
                    }
                    if (lv.ladder != ladder_want) {
                      return mismatch("ladder x=" + x.str(), lv.ladder, ladder_want);
                    }
                    break;
                  }
                  case FamilyKind::LegendreModified:
                    got = classical_legendre(m, x);
                    want = oracles::three_term(*classical, m, x);
                    break;
                  case FamilyKind::ChebyshevFirstModified:
                    got = classical_chebyshev1(m, x);
                    want = oracles::three_term(*classical, m, x);
                    break;
                  default:
                    got = classical_chebyshev2(m, x);
                    want = oracles::three_term(*classical, m, x);
                }
                if (got != want) return mismatch("x=" + x.str(), got, want);
              }
              return std::nullopt;
            });
  }

  // Structural relations between families.
  const auto matrix_of = [&](FamilyKind k) { return transfer_matrix(FamilySpec::simple(k), m).matrix; };
  switch (kind) {
    case FamilyKind::ChebyshevSecondModified:
      rec.run("sine-relation", "H M_U = sin H", range_m(m_max), [&]() -> Outcome {
        for (std::size_t k = 0; k <= m_max; ++k) {
          const LTMatrix mu = transfer_matrix(spec, k).matrix;
          if (auto d = first_matrix_difference(creation_matrix(k) * mu,
                                               series_of_H(sine_coefficients(k), k), at_m(k))) {
            return d;
          }
        }
        return std::nullopt;
      });
      break;
    case FamilyKind::Bernoulli2Iterated:
      rec.run("iterated", "M = M_B^2 = compose(B, B)", at_m(m), [&]() -> Outcome {
        const AppellVector b = appell_vector(FamilySpec::simple(FamilyKind::Bernoulli), m);
        if (auto d = first_matrix_difference(mat, b.matrix() * b.matrix(), "square")) return d;
        return first_matrix_difference(mat, compose(b, b).matrix(), "compose");
      });
      break;
    case FamilyKind::Euler2Iterated:
      rec.run("iterated", "M = 4 (P+I)^{-2} = M_E^2", at_m(m), [&]() -> Outcome {
        const LTMatrix e = matrix_of(FamilyKind::Euler);
        if (auto d = first_matrix_difference(mat, e * e, "square")) return d;
        const LTMatrix q =
            lt_inverse(pascal_generalized(m, Rat(1)) + LTMatrix::identity(m + 1));
        return first_matrix_difference(mat, Rat(4) * (q * q), "4 (P+I)^{-1} (P+I)^{-1}");
      });
      break;
    case FamilyKind::BernoulliEulerMixed:
      rec.run("mixed", "M = M_B M_E = M_E M_B", at_m(m), [&]() -> Outcome {
        const LTMatrix b = matrix_of(FamilyKind::Bernoulli);
        const LTMatrix e = matrix_of(FamilyKind::Euler);
        if (auto d = first_matrix_difference(mat, b * e, "M_B M_E")) return d;
        return first_matrix_difference(mat, e * b, "M_E M_B");
      });
      break;
    case FamilyKind::GeneralizedEuler:
      if (*spec.gamma_bar() == Rat(1, 2)) {
        rec.run("euler-special-case", "gamma-bar = 1/2 gives Euler", at_m(m), [&]() -> Outcome {
          return first_matrix_difference(mat, matrix_of(FamilyKind::Euler), "euler");
        });
      }
      break;
    default:
      break;
  }

  rec.run("composition", "compose(p, monomial) = p, (p + p)/2 = p", at_m(m), [&]() -> Outcome {
    const AppellVector mono = appell_vector(FamilySpec::simple(FamilyKind::Monomial), m);
    if (auto d = first_matrix_difference(compose(av, mono).matrix(), mat, "compose")) return d;
    if (auto d = first_matrix_difference(compose(mono, av).matrix(), mat, "compose (inner)")) {
      return d;
    }
    const CombineResult half = combine({av, av}, {Rat(1, 2), Rat(1, 2)});
    if (half.degenerate != !tm.invertible()) return Outcome("degeneracy flag mismatch");
    return first_matrix_difference(half.vector.matrix(), mat, "combine");
  });

  return out;
}

Report run(const Options& options) {
  Report report;
  RationalSampler sampler(options.seed);
  if (options.include_kernel) {
    auto k = kernel_checks(options.m_max, sampler, options);
    report.checks.insert(report.checks.end(), k.begin(), k.end());
  }
  const std::vector<FamilySpec> families =
      options.families.empty() ? default_families() : options.families;
  for (const FamilySpec& spec : families) {
    auto f = family_checks(spec, options.m_max, sampler, options);
    report.checks.insert(report.checks.end(), f.begin(), f.end());
  }
  return report;
}

std::string format_report(const Report& report) {
  std::ostringstream os;
  for (const auto& c : report.checks) {
    os << std::left << std::setw(5) << to_string(c.status) << ' ' << std::setw(30) << c.subject
       << ' ' << std::setw(24) << c.identity << ' ' << c.anchor;
    if (!c.detail.empty()) os << "  [" << c.detail << ']';
    os << '\n';
  }
  os << report.count(Status::Pass) << " passed, " << report.count(Status::Fail) << " failed, "
     << report.count(Status::NotApplicable) << " not applicable\n";
  if (const CheckResult* f = report.first_failure()) {
    os << "first failure: " << f->subject << ' ' << f->identity << ": " << f->detail << '\n';
  }
  return os.str();
}

}  // namespace appell::verify
