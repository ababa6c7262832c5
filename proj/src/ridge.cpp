#include "hc2/ridge.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace hc2 {

Matrix ridge_solve(const Matrix& x, const Matrix& y, double alpha) {
  Eigen::BDCSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  Vector factors(s.size());
  for (Index j = 0; j < s.size(); ++j) factors[j] = s[j] / (s[j] * s[j] + alpha);
  return svd.matrixV() * factors.asDiagonal() * (svd.matrixU().transpose() * y);
}

RidgeClassifier RidgeClassifier::fit(const Matrix& features, const std::vector<int>& labels,
                                     Index n_classes) {
  Index n = features.rows();
  Index p = features.cols();
  if (n < 1 || static_cast<std::size_t>(n) != labels.size())
    throw Hc2Error("ridge: feature/label size mismatch");

  RidgeClassifier model;
  model.n_classes_ = n_classes;

  std::vector<Index> counts(static_cast<std::size_t>(n_classes), 0);
  for (int l : labels) counts[static_cast<std::size_t>(l)]++;
  int present = 0, only = -1;
  for (Index c = 0; c < n_classes; ++c)
    if (counts[static_cast<std::size_t>(c)] > 0) {
      ++present;
      only = static_cast<int>(c);
    }
  if (present < 2) {
    model.constant_class_ = only;
    return model;
  }

  model.mean_ = features.colwise().mean();
  model.scale_.resize(p);
  for (Index j = 0; j < p; ++j) {
    double var = (features.col(j).array() - model.mean_[j]).square().sum() /
                 static_cast<double>(n);
    double sd = std::sqrt(var);
    model.scale_[j] = sd > 1e-12 ? sd : 1.0;
  }
  Matrix x = (features.rowwise() - model.mean_.transpose()).array().rowwise() /
             model.scale_.transpose().array();

  Index outputs = n_classes == 2 ? 1 : n_classes;
  Matrix y(n, outputs);
  for (Index i = 0; i < n; ++i)
    for (Index o = 0; o < outputs; ++o) {
      Index cls = n_classes == 2 ? 1 : o;
      y(i, o) = labels[static_cast<std::size_t>(i)] == static_cast<int>(cls) ? 1.0 : -1.0;
    }
  model.intercept_ = y.colwise().mean();
  Matrix yc = y.rowwise() - model.intercept_.transpose();

  Eigen::BDCSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector& s = svd.singularValues();
  Matrix uty = svd.matrixU().transpose() * yc;

  double best_alpha = 0.0, best_gcv = std::numeric_limits<double>::infinity();
  for (int g = 0; g < 10; ++g) {
    double alpha = std::pow(10.0, -3.0 + 6.0 * g / 9.0);
    Vector shrink(s.size());
    double df = 0.0;
    for (Index j = 0; j < s.size(); ++j) {
      shrink[j] = s[j] * s[j] / (s[j] * s[j] + alpha);
      df += shrink[j];
    }
    double denom = 1.0 - df / static_cast<double>(n);
    if (denom <= 1e-12) continue;
    Matrix fitted = svd.matrixU() * (shrink.asDiagonal() * uty);
    double gcv = ((yc - fitted) / denom).squaredNorm();
    if (gcv < best_gcv) {
      best_gcv = gcv;
      best_alpha = alpha;
    }
  }
  if (!std::isfinite(best_gcv)) best_alpha = 1.0;
  model.alpha_ = best_alpha;

  Vector factors(s.size());
  for (Index j = 0; j < s.size(); ++j) factors[j] = s[j] / (s[j] * s[j] + model.alpha_);
  model.beta_ = svd.matrixV() * factors.asDiagonal() * uty;
  return model;
}

Vector RidgeClassifier::scores(const Eigen::Ref<const Vector>& features) const {
  Vector out = Vector::Zero(n_classes_);
  if (constant_class_ >= 0) {
    out[constant_class_] = 1.0;
    return out;
  }
  Vector x = ((features - mean_).array() / scale_.array()).matrix();
  Vector raw = beta_.transpose() * x + intercept_;
  if (n_classes_ == 2) {
    out[0] = -raw[0];
    out[1] = raw[0];
  } else {
    out = raw;
  }
  return out;
}

int RidgeClassifier::predict(const Eigen::Ref<const Vector>& features) const {
  Vector s = scores(features);
  int best = 0;
  for (Index c = 1; c < s.size(); ++c)
    if (s[c] > s[best]) best = static_cast<int>(c);
  return best;
}

void RidgeClassifier::save(ByteWriter& w) const {
  w.i64(n_classes_);
  w.i32(constant_class_);
  w.vector(mean_);
  w.vector(scale_);
  w.matrix(beta_);
  w.vector(intercept_);
  w.f64(alpha_);
}

RidgeClassifier RidgeClassifier::load(ByteReader& r) {
  RidgeClassifier m;
  m.n_classes_ = r.i64();
  m.constant_class_ = r.i32();
  m.mean_ = r.vector();
  m.scale_ = r.vector();
  m.beta_ = r.matrix();
  m.intercept_ = r.vector();
  m.alpha_ = r.f64();
  return m;
}

}  // namespace hc2
