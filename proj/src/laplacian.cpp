#include "graphlap/laplacian.hpp"

#include <string>

#include "graphlap/error.hpp"

namespace graphlap {

namespace {

std::string radius_str(std::size_t r) { return std::to_string(r); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void require_nonnegative(const Rational& value, const std::string& where) {
  if (sgn(value) < 0) throw Error(ErrorCode::InvalidLambda, "negative value " + to_string(value) + " " + where);
}

Rational inverse_degree(const Ball& ball, VertexId v) {
  const auto deg = ball.degree(v);
  if (deg == 0) throw Error(ErrorCode::OracleInconsistent, "vertex " + ball.label_string(v) + " is isolated");
  return Rational(1, static_cast<unsigned long>(deg));
}

}  // namespace

BallFunction::BallFunction(BallPtr ball, std::size_t radius, RationalVector values)
    : ball_(std::move(ball)), radius_(radius), values_(std::move(values)) {
  const auto expected = ball_->prefix_size(radius_);
  if (values_.size() != expected) {
    throw Error(ErrorCode::DimensionMismatch, "function on B_" + radius_str(radius_) + " needs " +
                                                  std::to_string(expected) + " values, got " +
                                                  std::to_string(values_.size()));
  }
}

BallFunction BallFunction::zeros(BallPtr ball, std::size_t radius) {
  const auto size = ball->prefix_size(radius);
  return BallFunction(std::move(ball), radius, RationalVector(size));
}

BallFunction BallFunction::restrict_to(std::size_t r) const {
  if (r > radius_) {
    throw Error(ErrorCode::InsufficientDomain, "cannot restrict B_" + radius_str(radius_) + " to B_" + radius_str(r));
  }
  const auto size = ball_->prefix_size(r);
  return BallFunction(ball_, r, RationalVector(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(size)));
}

BallFunction BallFunction::extend_by_zero(std::size_t r) const {
  if (r < radius_) {
    throw Error(ErrorCode::InsufficientDomain, "cannot extend B_" + radius_str(radius_) + " to B_" + radius_str(r));
  }
  RationalVector out = values_;
  out.resize(ball_->prefix_size(r));
  return BallFunction(ball_, r, std::move(out));
}

LambdaField::LambdaField(Form form) : form_(std::move(form)) {
  if (const auto* c = std::get_if<Constant>(&form_)) require_nonnegative(c->value, "in constant lambda");
  if (const auto* d = std::get_if<Distance>(&form_)) require_nonnegative(d->scale, "as distance lambda scale");
  if (const auto* s = std::get_if<Sparse>(&form_)) {
    for (const auto& [v, value] : s->values) require_nonnegative(value, "at vertex " + std::to_string(v));
  }
}

Rational LambdaField::at(const Ball& ball, VertexId v) const {
  struct Visitor {
    const Ball& ball;
    VertexId v;
    Rational operator()(const Zero&) const { return 0; }
    Rational operator()(const Constant& c) const { return c.value; }
    Rational operator()(const Distance& d) const {
      return d.scale * Rational(static_cast<unsigned long>(ball.distance(v)));
    }
    Rational operator()(const Sparse& s) const {
      auto it = s.values.find(v);
      return it == s.values.end() ? Rational(0) : it->second;
    }
  };
  return std::visit(Visitor{ball, v}, form_);
}

Rational TargetFunction::at(const Ball& ball, VertexId v) const {
  struct Visitor {
    const Ball& ball;
    VertexId v;
    Rational operator()(const Zero&) const { return 0; }
    Rational operator()(const Delta&) const { return v == 0 ? 1 : 0; }
    Rational operator()(const Constant& c) const { return c.value; }
    Rational operator()(const Radial& r) const {
      const auto d = ball.distance(v);
      return d < r.coeffs.size() ? r.coeffs[d] : Rational(0);
    }
    Rational operator()(const Geometric& g) const {
      Rational out = g.scale;
      for (std::size_t i = 0; i < ball.distance(v); ++i) out *= g.ratio;
      return out;
    }
    Rational operator()(const Degree&) const { return Rational(static_cast<unsigned long>(ball.degree(v))); }
    Rational operator()(const Sparse& s) const {
      auto it = s.values.find(v);
      return it == s.values.end() ? Rational(0) : it->second;
    }
    Rational operator()(const Random& r) const {
      const auto h1 = splitmix64(r.seed ^ splitmix64(static_cast<std::uint64_t>(v)));
      const auto h2 = splitmix64(h1);
      Rational coin(static_cast<unsigned long>(h1 & 0xffffffffULL), 1UL);
      mpz_mul_2exp(coin.get_den_mpz_t(), coin.get_den_mpz_t(), 32);
      coin.canonicalize();
      if (coin >= r.density) return 0;
      const long num = static_cast<long>(h2 % 19) - 9;
      const unsigned long den = (h2 / 19) % 9 + 1;
      Rational out(num, den);
      out.canonicalize();
      return out;
    }
  };
  return std::visit(Visitor{ball, v}, form_);
}

RationalVector TargetFunction::on_ball(const Ball& ball, std::size_t r) const {
  const auto size = ball.prefix_size(r);
  RationalVector out(size);
  for (VertexId v = 0; v < size; ++v) out[v] = at(ball, v);
  return out;
}

BallFunction apply_laplacian(const BallFunction& f, const LambdaField& lambda, std::optional<std::size_t> n) {
  if (!n) {
    if (f.radius() == 0) throw Error(ErrorCode::InsufficientDomain, "function on B_0 has no Laplacian on any ball");
    n = f.radius() - 1;
  }
  const Ball& ball = *f.ball();
  if (f.radius() < *n + 1) {
    throw Error(ErrorCode::InsufficientDomain, "Laplacian on B_" + radius_str(*n) + " needs values on B_" +
                                                   radius_str(*n + 1) + ", function lives on B_" +
                                                   radius_str(f.radius()));
  }
  if (*n > ball.radius()) {
    throw Error(ErrorCode::InsufficientDomain, "ball of radius " + radius_str(ball.radius()) +
                                                   " lacks adjacency for B_" + radius_str(*n));
  }
  const auto size = ball.prefix_size(*n);
  RationalVector out(size);
  for (VertexId v = 0; v < size; ++v) {
    Rational sum;
    for (auto w : ball.neighbors(v)) sum += f[w];
    out[v] = (1 + lambda.at(ball, v)) * f[v] - sum * inverse_degree(ball, v);
  }
  return BallFunction(f.ball(), *n, std::move(out));
}

RationalMatrix restricted_laplacian_matrix(const Ball& ball, std::size_t n, const LambdaField& lambda) {
  if (n > ball.radius()) {
    throw Error(ErrorCode::InsufficientDomain,
                "ball of radius " + radius_str(ball.radius()) + " lacks adjacency for B_" + radius_str(n));
  }
  const auto rows = ball.prefix_size(n);
  RationalMatrix out(rows, ball.prefix_size(n + 1));
  for (VertexId v = 0; v < rows; ++v) {
    out(v, v) = 1 + lambda.at(ball, v);
    const Rational w_coeff = -inverse_degree(ball, v);
    for (auto w : ball.neighbors(v)) out(v, w) += w_coeff;
  }
  return out;
}

RationalMatrix truncated_operator_matrix(const Ball& ball, std::size_t n, const LambdaField& lambda) {
  if (n > ball.radius()) {
    throw Error(ErrorCode::InsufficientDomain,
                "ball of radius " + radius_str(ball.radius()) + " lacks adjacency for B_" + radius_str(n));
  }
  const auto size = ball.prefix_size(n);
  RationalMatrix out(size, size);
  for (VertexId v = 0; v < size; ++v) {
    out(v, v) = 1 + lambda.at(ball, v);
    const Rational w_coeff = -inverse_degree(ball, v);
    for (auto w : ball.neighbors(v)) {
      if (w < size) out(v, w) += w_coeff;
    }
  }
  return out;
}

RationalMatrix truncated_operator_matrix(const OraclePtr& oracle, std::size_t n, const LambdaField& lambda) {
  return truncated_operator_matrix(*enumerate_ball(oracle, n), n, lambda);
}

RationalMatrix restriction_matrix(const Ball& ball, std::size_t n, std::size_t m) {
  if (n > m) throw Error(ErrorCode::BadRadii, "restriction from B_" + radius_str(m + 1) + " to B_" + radius_str(n + 1));
  const auto rows = ball.prefix_size(n + 1);
  RationalMatrix out(rows, ball.prefix_size(m + 1));
  for (std::size_t i = 0; i < rows; ++i) out(i, i) = 1;
  return out;
}

}  // namespace graphlap
