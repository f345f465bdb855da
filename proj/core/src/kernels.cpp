#include "dilator/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace dilator {

FiniteKernel::FiniteKernel(std::vector<std::string> z_labels, std::vector<std::string> x_labels,
                           std::vector<std::size_t> pi, std::vector<std::vector<Rational>> rows)
    : z_labels_(std::move(z_labels)),
      x_labels_(std::move(x_labels)),
      pi_(std::move(pi)),
      rows_(std::move(rows)) {
  if (z_labels_.empty() || x_labels_.empty()) throw std::invalid_argument("empty label set");
  if (pi_.size() != z_labels_.size()) throw std::invalid_argument("pi size mismatch");
  std::vector<char> hit(x_labels_.size(), 0);
  for (std::size_t x : pi_) {
    if (x >= x_labels_.size()) throw std::invalid_argument("pi maps outside X");
    hit[x] = 1;
  }
  if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }))
    throw std::invalid_argument("pi must be surjective");
  if (rows_.size() != x_labels_.size()) throw std::invalid_argument("row count mismatch");
  for (const auto& r : rows_)
    if (r.size() != z_labels_.size()) throw std::invalid_argument("row length mismatch");
  rows_valid_ = true;
  for (const auto& r : rows_) {
    Rational sum = 0;
    for (const auto& v : r) {
      if (v < 0 || v > 1) rows_valid_ = false;
      sum += v;
    }
    if (sum != 1) rows_valid_ = false;
  }
}

FiniteKernel FiniteKernel::from_json(const nlohmann::json& j) {
  const auto z_labels = j.at("Z").get<std::vector<std::string>>();
  const auto x_labels = j.at("X").get<std::vector<std::string>>();
  const auto index_of = [](const std::vector<std::string>& labels, const std::string& name) {
    const auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw std::invalid_argument("unknown label '" + name + "'");
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::vector<std::size_t> pi(z_labels.size());
  for (std::size_t z = 0; z < z_labels.size(); ++z)
    pi[z] = index_of(x_labels, j.at("pi").at(z_labels[z]).get<std::string>());
  std::vector<std::vector<Rational>> rows(x_labels.size());
  for (std::size_t x = 0; x < x_labels.size(); ++x) {
    const auto& row = j.at("rows").at(x_labels[x]);
    if (!row.is_array() || row.size() != z_labels.size())
      throw std::invalid_argument("row '" + x_labels[x] + "' has wrong length");
    for (const auto& cell : row) rows[x].push_back(parse_rational(cell.get<std::string>()));
  }
  return FiniteKernel(z_labels, x_labels, std::move(pi), std::move(rows));
}

Json FiniteKernel::to_json() const {
  Json j;
  j["Z"] = z_labels_;
  j["X"] = x_labels_;
  Json pi = Json::object();
  for (std::size_t z = 0; z < z_size(); ++z) pi[z_labels_[z]] = x_labels_[pi_[z]];
  j["pi"] = std::move(pi);
  Json rows = Json::object();
  for (std::size_t x = 0; x < x_size(); ++x) {
    Json row = Json::array();
    for (const auto& v : rows_[x]) row.push_back(format_rational(v));
    rows[x_labels_[x]] = std::move(row);
  }
  j["rows"] = std::move(rows);
  return j;
}

std::vector<Rational> FiniteKernel::apply(const std::vector<Rational>& b) const {
  if (!rows_valid_) throw std::invalid_argument("kernel rows are not probability vectors");
  if (b.size() != z_size()) throw std::invalid_argument("function dimension mismatch");
  std::vector<Rational> out(x_size(), Rational(0));
  for (std::size_t x = 0; x < x_size(); ++x)
    for (std::size_t z = 0; z < z_size(); ++z) out[x] += rows_[x][z] * b[z];
  return out;
}

std::vector<Rational> FiniteKernel::lift(const std::vector<Rational>& a) const {
  if (a.size() != x_size()) throw std::invalid_argument("function dimension mismatch");
  std::vector<Rational> out(z_size());
  for (std::size_t z = 0; z < z_size(); ++z) out[z] = a[pi_[z]];
  return out;
}

VerificationReport FiniteKernel::validate_rows() const {
  VerificationReport report;
  bool ok = true;
  for (std::size_t x = 0; x < x_size() && ok; ++x) {
    Rational sum = 0;
    for (std::size_t z = 0; z < z_size(); ++z) {
      const Rational& v = rows_[x][z];
      if (v < 0 || v > 1) {
        ok = false;
        report.add_fail("rows_are_probability_vectors", Json{{"rows", x_size()}},
                        Json{{"x", x_labels_[x]}, {"z", z_labels_[z]}, {"value", format_rational(v)}});
        break;
      }
      sum += v;
    }
    if (ok && sum != 1) {
      ok = false;
      report.add_fail("rows_are_probability_vectors", Json{{"rows", x_size()}},
                      Json{{"x", x_labels_[x]}, {"sum", format_rational(sum)}});
    }
  }
  if (ok) report.add_pass("rows_are_probability_vectors", Json{{"rows", x_size()}});
  return report;
}

VerificationReport FiniteKernel::is_conditional_expectation() const {
  VerificationReport report = validate_rows();

  bool supported = true;
  for (std::size_t x = 0; x < x_size() && supported; ++x) {
    for (std::size_t z = 0; z < z_size(); ++z) {
      if (rows_[x][z] != 0 && pi_[z] != x) {
        supported = false;
        report.add_fail("support_in_fiber", Json{{"rows", x_size()}},
                        Json{{"x", x_labels_[x]},
                             {"z", z_labels_[z]},
                             {"mass", format_rational(rows_[x][z])},
                             {"pi_z", x_labels_[pi_[z]]}});
        break;
      }
    }
  }
  if (!supported) return report;
  report.add_pass("support_in_fiber", Json{{"rows", x_size()}});
  if (!rows_valid_) return report;  // the laws only make sense for a map

  // The support condition implies the algebra laws; confirm them exactly on
  // indicator functions.
  bool idempotent = true, bimodule = true, fixes_range = true;
  for (std::size_t z0 = 0; z0 < z_size(); ++z0) {
    std::vector<Rational> b(z_size(), Rational(0));
    b[z0] = 1;
    const auto once = apply(b);
    if (apply(lift(once)) != once) idempotent = false;
    for (std::size_t x0 = 0; x0 < x_size(); ++x0) {
      std::vector<Rational> a(x_size(), Rational(0));
      a[x0] = 1;
      const auto lifted = lift(a);
      std::vector<Rational> ab(z_size());
      for (std::size_t z = 0; z < z_size(); ++z) ab[z] = lifted[z] * b[z];
      auto lhs = apply(ab);
      std::vector<Rational> rhs = once;
      for (std::size_t x = 0; x < x_size(); ++x) rhs[x] *= a[x];
      if (lhs != rhs) bimodule = false;
    }
  }
  for (std::size_t x0 = 0; x0 < x_size(); ++x0) {
    std::vector<Rational> a(x_size(), Rational(0));
    a[x0] = 1;
    if (apply(lift(a)) != a) fixes_range = false;
  }
  const Json params{{"indicators", z_size() + x_size()}};
  if (idempotent) report.add_pass("idempotence", params);
  else report.add_fail("idempotence", params, nullptr);
  if (bimodule) report.add_pass("bimodule_law", params);
  else report.add_fail("bimodule_law", params, nullptr);
  if (fixes_range) report.add_pass("fixes_range", params);
  else report.add_fail("fixes_range", params, nullptr);
  return report;
}

FiniteKernel::FaithfulnessResult FiniteKernel::faithfulness_and_index() const {
  FaithfulnessResult result;
  for (std::size_t z = 0; z < z_size(); ++z) {
    if (weight(z) == 0) {
      result.faithful = false;
      result.witness_z = z;
      return result;
    }
  }
  result.faithful = true;
  result.index.reserve(z_size());
  for (std::size_t z = 0; z < z_size(); ++z) result.index.push_back(Rational(1) / weight(z));
  return result;
}

FiniteKernel kernel_from_map(std::vector<std::string> z_labels, std::vector<std::string> x_labels,
                             std::vector<std::size_t> pi,
                             const std::vector<std::vector<Rational>>& map_columns_on_indicators) {
  if (map_columns_on_indicators.size() != z_labels.size())
    throw std::invalid_argument("need one indicator image per point of Z");
  std::vector<std::vector<Rational>> rows(x_labels.size(),
                                          std::vector<Rational>(z_labels.size(), Rational(0)));
  for (std::size_t z = 0; z < z_labels.size(); ++z) {
    const auto& col = map_columns_on_indicators[z];
    if (col.size() != x_labels.size()) throw std::invalid_argument("indicator image size mismatch");
    for (std::size_t x = 0; x < x_labels.size(); ++x) rows[x][z] = col[x];
  }
  return FiniteKernel(std::move(z_labels), std::move(x_labels), std::move(pi), std::move(rows));
}

VerificationReport kernel_suite(const FiniteKernel& kernel) {
  VerificationReport report = kernel.is_conditional_expectation();
  const bool cond_exp = report.all_ok();
  if (!kernel.rows_valid()) return report;

  // kernel -> map -> kernel: recover the rows from indicator images.
  {
    std::vector<std::vector<Rational>> columns;
    columns.reserve(kernel.z_size());
    for (std::size_t z = 0; z < kernel.z_size(); ++z) {
      std::vector<Rational> b(kernel.z_size(), Rational(0));
      b[z] = 1;
      columns.push_back(kernel.apply(b));
    }
    std::vector<std::string> zl, xl;
    std::vector<std::size_t> pi;
    for (std::size_t z = 0; z < kernel.z_size(); ++z) {
      zl.push_back(kernel.z_label(z));
      pi.push_back(kernel.pi(z));
    }
    for (std::size_t x = 0; x < kernel.x_size(); ++x) xl.push_back(kernel.x_label(x));
    const FiniteKernel rebuilt = kernel_from_map(zl, xl, pi, columns);
    bool same = true;
    for (std::size_t x = 0; x < kernel.x_size() && same; ++x)
      same = rebuilt.row(x) == kernel.row(x);
    if (same) report.add_pass("roundtrip_kernel_map_kernel", Json{{"Z", kernel.z_size()}});
    else report.add_fail("roundtrip_kernel_map_kernel", Json{{"Z", kernel.z_size()}}, nullptr);
  }

  // map -> kernel -> map: rebuild the kernel from the map's indicator
  // images and compare the two maps on indicators and a dense function
  // (indicators span, so this is agreement on all functions).
  {
    std::vector<std::vector<Rational>> columns;
    std::vector<std::string> zl, xl;
    std::vector<std::size_t> pi;
    for (std::size_t z = 0; z < kernel.z_size(); ++z) {
      std::vector<Rational> b(kernel.z_size(), Rational(0));
      b[z] = 1;
      columns.push_back(kernel.apply(b));
      zl.push_back(kernel.z_label(z));
      pi.push_back(kernel.pi(z));
    }
    for (std::size_t x = 0; x < kernel.x_size(); ++x) xl.push_back(kernel.x_label(x));
    const FiniteKernel rebuilt = kernel_from_map(zl, xl, pi, columns);
    bool same = true;
    for (std::size_t z = 0; z < kernel.z_size() && same; ++z) {
      std::vector<Rational> b(kernel.z_size(), Rational(0));
      b[z] = 1;
      same = rebuilt.apply(b) == kernel.apply(b);
    }
    std::vector<Rational> dense(kernel.z_size());
    for (std::size_t z = 0; z < kernel.z_size(); ++z)
      dense[z] = Rational(static_cast<long long>(z) + 1, 7);
    same = same && rebuilt.apply(dense) == kernel.apply(dense);
    if (same) report.add_pass("roundtrip_map_kernel_map", Json{{"Z", kernel.z_size()}});
    else report.add_fail("roundtrip_map_kernel_map", Json{{"Z", kernel.z_size()}}, nullptr);
  }

  if (!cond_exp) return report;  // faithfulness/index needs the support condition

  const auto faith = kernel.faithfulness_and_index();
  if (faith.faithful) {
    Json index = Json::array();
    for (std::size_t z = 0; z < kernel.z_size(); ++z)
      index.push_back(Json{{"z", kernel.z_label(z)}, {"index", format_rational(faith.index[z])}});
    report.add_certificate("faithfulness_index", Json{{"Z", kernel.z_size()}},
                           Json{{"faithful", true}, {"index", index}});
  } else {
    const std::size_t z = *faith.witness_z;
    std::vector<Rational> b(kernel.z_size(), Rational(0));
    b[z] = 1;
    std::vector<Rational> bb(b);
    for (std::size_t i = 0; i < bb.size(); ++i) bb[i] *= b[i];
    const auto image = kernel.apply(bb);
    const bool verified =
        std::all_of(image.begin(), image.end(), [](const Rational& v) { return v == 0; });
    report.add_witness("faithfulness_index", Json{{"Z", kernel.z_size()}},
                       Json{{"faithful", false},
                            {"index", "infinite"},
                            {"witness_z", kernel.z_label(z)},
                            {"F_of_b_star_b_is_zero", verified}});
  }
  return report;
}

}  // namespace dilator
