#include "hsca/operators.hpp"

#include <stdexcept>

namespace hsca {

bool supported_context(int m, int k) {
  return m >= 3 && m <= kMaxDim && k >= 0 && m + 2 * k - 4 >= 1;
}

void require_supported(const SpinContext& ctx) {
  if (!supported_context(ctx.m, ctx.k)) {
    throw std::invalid_argument("unsupported (m,k): need m >= 3 and m+2k-4 >= 1");
  }
}

bool is_h_field(const CliffPoly& p, int k) {
  return p.is_homogeneous(Family::U, k) && laplacian(p, Family::U).is_zero();
}

HField::HField(CliffPoly p, int m_, int k_) : poly(std::move(p)), m(m_), k(k_) {
  if (poly.dim() != m) throw std::invalid_argument("HField: dimension mismatch");
  if (!is_h_field(poly, k)) {
    throw std::invalid_argument("HField: not u-homogeneous harmonic of degree k");
  }
}

namespace {

CliffPoly pplus_dx(const CliffPoly& f, const SpinContext& ctx) {
  return detail::project_plus_unchecked(dirac(f, Family::X), ctx.k);
}

CliffPoly pminus_dx(const CliffPoly& f, const SpinContext& ctx) {
  return detail::project_minus_unchecked(dirac(f, Family::X), ctx.k);
}

void require_monogenic_valued(const CliffPoly& f) {
  if (!in_monogenic_summand(f)) {
    throw std::invalid_argument("operator input must be M_k-valued");
  }
}

void require_complement_valued(const CliffPoly& f, int k) {
  if (f.is_zero()) return;
  if (!detail::project_plus_unchecked(f, k).is_zero()) {
    throw std::invalid_argument("operator input must be u·M_{k-1}-valued");
  }
}

}  // namespace

CliffPoly rarita_schwinger(const CliffPoly& f, const SpinContext& ctx) {
  require_supported(ctx);
  require_monogenic_valued(f);
  return pplus_dx(f, ctx);
}

CliffPoly twistor(const CliffPoly& f, const SpinContext& ctx) {
  require_supported(ctx);
  require_complement_valued(f, ctx.k);
  return pplus_dx(f, ctx);
}

CliffPoly dual_twistor(const CliffPoly& f, const SpinContext& ctx) {
  require_supported(ctx);
  require_monogenic_valued(f);
  return pminus_dx(f, ctx);
}

CliffPoly remaining_operator(const CliffPoly& f, const SpinContext& ctx) {
  require_supported(ctx);
  require_complement_valued(f, ctx.k);
  return pminus_dx(f, ctx);
}

CliffPoly bosonic_laplacian_direct(const CliffPoly& f, const SpinContext& ctx) {
  require_supported(ctx);
  const int n = ctx.n();
  const CliffPoly mixed = grad_u_dot_grad_x(f);
  CliffPoly out = laplacian(f, Family::X);
  out += u_dot_grad_x(mixed).scaled(ExactScalar(Rational(-4, n - 2)));
  out += times_norm_squared(grad_u_dot_grad_x(mixed), Family::U)
             .scaled(ExactScalar(Rational(4, static_cast<long long>(n - 2) * (n - 4))));
  return out;
}

CliffPoly bosonic_laplacian_composed(const CliffPoly& f, const SpinContext& ctx,
                                     CompositionLine line) {
  require_supported(ctx);
  const int n = ctx.n();
  const Rational two_over(2, n - 4);
  const Rational top_over(n, n - 4);

  const CliffPoly fp = detail::project_plus_unchecked(f, ctx.k);
  const CliffPoly fm = detail::project_minus_unchecked(f, ctx.k);

  CliffPoly out = -pplus_dx(pplus_dx(fp, ctx), ctx);
  if (line == CompositionLine::First) {
    out += pminus_dx(pplus_dx(fp, ctx), ctx).scaled(ExactScalar(two_over));
    out -= pplus_dx(pminus_dx(fm, ctx), ctx).scaled(ExactScalar(two_over));
  } else {
    out += pplus_dx(pplus_dx(fm, ctx), ctx).scaled(ExactScalar(two_over));
    out -= pminus_dx(pminus_dx(fp, ctx), ctx).scaled(ExactScalar(two_over));
  }
  out -= pminus_dx(pminus_dx(fm, ctx), ctx).scaled(ExactScalar(top_over));
  return out;
}

CliffPoly bosonic_laplacian_rs(const CliffPoly& f, const SpinContext& ctx) {
  const CliffPoly first = bosonic_laplacian_composed(f, ctx, CompositionLine::First);
  const CliffPoly second = bosonic_laplacian_composed(f, ctx, CompositionLine::Second);
  if (first != second) {
    throw std::logic_error("bosonic_laplacian_rs: composition lines disagree");
  }
  return first;
}

namespace {

struct MatrixWeights {
  // 2/√((m+2k)(m+2k−4)), 2/(m+2k−4), √((m+2k)/(m+2k−4)), as exact scalars.
  ExactScalar upper_right;
  ExactScalar lower_left;
  ExactScalar lower_right;
};

MatrixWeights matrix_weights(const SpinContext& ctx) {
  const int n = ctx.n();
  const auto rad = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 4);
  MatrixWeights w;
  w.upper_right = ExactScalar(Rational(0), Rational(2, static_cast<long long>(rad)), rad);
  w.lower_left = ExactScalar(Rational(2, n - 4));
  w.lower_right = ExactScalar(Rational(0), Rational(1, n - 4), rad);
  return w;
}

}  // namespace

HPair matrix_dirac_apply(const HPair& f, const SpinContext& ctx) {
  require_supported(ctx);
  const MatrixWeights w = matrix_weights(ctx);
  const CliffPoly p1 = detail::project_plus_unchecked(f.f1, ctx.k);
  const CliffPoly m1 = detail::project_minus_unchecked(f.f1, ctx.k);
  const CliffPoly p2 = detail::project_plus_unchecked(f.f2, ctx.k);
  const CliffPoly m2 = detail::project_minus_unchecked(f.f2, ctx.k);
  HPair out{
      -pplus_dx(p1, ctx) + pminus_dx(p2, ctx).scaled(w.upper_right),
      pplus_dx(m1, ctx).scaled(w.lower_left) + pminus_dx(m2, ctx).scaled(w.lower_right)};
  return out;
}

HPair matrix_dirac_transpose_apply(const HPair& f, const SpinContext& ctx) {
  require_supported(ctx);
  const MatrixWeights w = matrix_weights(ctx);
  const CliffPoly p1 = detail::project_plus_unchecked(f.f1, ctx.k);
  const CliffPoly m1 = detail::project_minus_unchecked(f.f1, ctx.k);
  const CliffPoly p2 = detail::project_plus_unchecked(f.f2, ctx.k);
  const CliffPoly m2 = detail::project_minus_unchecked(f.f2, ctx.k);
  HPair out{
      -pplus_dx(p1, ctx) + pplus_dx(m2, ctx).scaled(w.lower_left),
      pminus_dx(p1, ctx).scaled(w.upper_right) + pminus_dx(m2, ctx).scaled(w.lower_right)};
  return out;
}

HPair matrix_laplacian_apply(const HPair& f, const SpinContext& ctx) {
  require_supported(ctx);
  const int n = ctx.n();
  const ExactScalar two_over{Rational(2, n - 4)};
  const ExactScalar top_over{Rational(n, n - 4)};
  const CliffPoly p1 = detail::project_plus_unchecked(f.f1, ctx.k);
  const CliffPoly m2 = detail::project_minus_unchecked(f.f2, ctx.k);
  HPair out{
      pplus_dx(pplus_dx(p1, ctx), ctx) -
          pplus_dx(pplus_dx(m2, ctx), ctx).scaled(two_over),
      pminus_dx(pminus_dx(p1, ctx), ctx).scaled(two_over) +
          pminus_dx(pminus_dx(m2, ctx), ctx).scaled(top_over)};
  return out;
}

Multivector constant_coefficient(const CliffPoly& p) {
  Multivector out(p.dim());
  for (const auto& [mono, coeff] : p.terms()) {
    if (mono.total_degree() != 0) {
      throw std::logic_error("constant_coefficient: polynomial is not constant");
    }
    out += coeff;
  }
  return out;
}

StokesSides stokes_pairing(const HPair& f, const HPair& g, const SpinContext& ctx) {
  require_supported(ctx);
  const int m = ctx.m;
  const int n = ctx.n();
  const auto rad = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 4);
  // diag(1, −√((m+2k)/(m+2k−4))) weight on the second component.
  const ExactScalar second_weight(Rational(0), Rational(-1, n - 4), rad);

  const CliffPoly xvec = CliffPoly::vector_variable(m, Family::X);

  const auto boundary_term = [&](const CliffPoly& a, const CliffPoly& b) {
    const CliffPoly integrand = poly_mul(poly_mul(a.conjugated(), xvec), b);
    return sphere_integral(sphere_integral(integrand, Family::U), Family::X);
  };
  CliffPoly boundary = boundary_term(f.f1, g.f1);
  boundary += boundary_term(f.f2, g.f2).scaled(second_weight);

  const HPair df = matrix_dirac_apply(f, ctx);
  const HPair dg = matrix_dirac_apply(g, ctx);

  const auto volume_term = [&](const CliffPoly& a1, const CliffPoly& b1,
                               const CliffPoly& a2, const CliffPoly& b2) {
    CliffPoly integrand = poly_mul(a1.conjugated(), b1);
    integrand += poly_mul(a2.conjugated(), b2);
    return ball_integral(sphere_integral(integrand, Family::U), Family::X);
  };
  CliffPoly volume = volume_term(df.f1, g.f1, df.f2, g.f2);
  volume -= volume_term(f.f1, dg.f1, f.f2, dg.f2);

  return StokesSides{constant_coefficient(boundary), constant_coefficient(volume)};
}

}  // namespace hsca
