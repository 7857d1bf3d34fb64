#include "permfe/seqtools.hpp"

#include <sstream>

#include <json.hpp>

#include "permfe/engines.hpp"
#include "permfe/errors.hpp"

namespace permfe {

std::optional<Format> parse_format(std::string_view name) {
  if (name == "bfile") return Format::bfile;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "plain") return Format::plain;
  return std::nullopt;
}

std::string emit(const SequenceRecord& seq, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::bfile:
      for (std::size_t k = 0; k < seq.values.size(); ++k) {
        out << seq.offset + static_cast<int>(k) << ' ' << seq.values[k] << '\n';
      }
      break;
    case Format::csv:
      out << "n,value\n";
      for (std::size_t k = 0; k < seq.values.size(); ++k) {
        out << seq.offset + static_cast<int>(k) << ',' << seq.values[k] << '\n';
      }
      break;
    case Format::plain:
      for (std::size_t k = 0; k < seq.values.size(); ++k) {
        if (k) out << ", ";
        out << seq.values[k];
      }
      break;
    case Format::json: {
      nlohmann::ordered_json j;
      j["engine"] = seq.engine;
      j["patterns"] = seq.patterns;
      if (seq.r) j["r"] = *seq.r;
      if (seq.r1) j["r1"] = *seq.r1;
      if (seq.r2) j["r2"] = *seq.r2;
      j["q"] = seq.refine_q;
      if (!seq.note.empty()) j["note"] = seq.note;
      j["offset"] = seq.offset;
      auto values = nlohmann::ordered_json::array();
      for (const auto& v : seq.values) values.push_back(v.str());
      j["values"] = std::move(values);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return out.str();
}

namespace {

BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty sequence value");
  const std::size_t digits_from = text[0] == '-' ? 1 : 0;
  if (digits_from == text.size()) throw InvalidInput("bad sequence value \"" + text + "\"");
  for (std::size_t k = digits_from; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw InvalidInput("bad sequence value \"" + text + "\"");
    }
  }
  return BigInt(text);
}

}  // namespace

SequenceRecord parse_bfile(std::string_view text) {
  SequenceRecord seq;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  int expected_n = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int n = 0;
    std::string value;
    if (!(fields >> n >> value)) throw InvalidInput("bad b-file line \"" + line + "\"");
    if (first) {
      seq.offset = n;
      expected_n = n;
      first = false;
    }
    if (n != expected_n) throw InvalidInput("b-file indices are not consecutive");
    ++expected_n;
    seq.values.push_back(parse_decimal(value));
  }
  return seq;
}

SequenceRecord parse_json(std::string_view text) {
  SequenceRecord seq;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    seq.engine = j.at("engine").get<std::string>();
    seq.patterns = j.at("patterns").get<std::vector<std::string>>();
    if (j.contains("r")) seq.r = j["r"].get<int>();
    if (j.contains("r1")) seq.r1 = j["r1"].get<int>();
    if (j.contains("r2")) seq.r2 = j["r2"].get<int>();
    seq.refine_q = j.value("q", false);
    seq.note = j.value("note", std::string{});
    seq.offset = j.at("offset").get<int>();
    for (const auto& v : j.at("values")) {
      seq.values.push_back(parse_decimal(v.get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad sequence JSON: ") + e.what());
  }
  return seq;
}

std::vector<BigRational> finite_difference(std::span<const BigRational> seq) {
  std::vector<BigRational> out;
  for (std::size_t k = 1; k < seq.size(); ++k) out.push_back(seq[k] - seq[k - 1]);
  return out;
}

BigRational evaluate_polynomial(std::span<const BigRational> coeffs,
                                const BigRational& n) {
  BigRational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
  return acc;
}

std::string FitResult::to_string() const {
  std::ostringstream out;
  switch (verdict) {
    case Verdict::insufficient_data:
      out << "insufficient-data";
      break;
    case Verdict::fails_at:
      out << "fails-at(" << failing_n << ")";
      break;
    case Verdict::fits: {
      out << "fits from n=" << valid_from << ": p(n) = ";
      bool first = true;
      for (std::size_t k = 0; k < poly_coeffs.size(); ++k) {
        if (poly_coeffs[k] == 0 && poly_coeffs.size() > 1) continue;
        if (!first) out << " + ";
        first = false;
        out << '(' << poly_coeffs[k] << ')';
        if (k >= 1) out << "*n";
        if (k >= 2) out << '^' << k;
      }
      break;
    }
  }
  return out.str();
}

FitResult fit_poly_times_2n(int offset, std::span<const BigInt> values,
                            int degree, int valid_from) {
  FitResult fit;
  fit.valid_from = valid_from;
  if (degree < 0) throw InvalidInput("degree must be >= 0");
  const int skip = valid_from - offset;
  if (skip < 0) throw InvalidInput("valid_from precedes the first value");
  const int points = static_cast<int>(values.size()) - skip;
  if (points < degree + 3) return fit;

  std::vector<BigRational> b;
  BigInt pow2 = BigInt(1) << valid_from;
  for (int k = 0; k < points; ++k) {
    b.emplace_back(values[skip + k], pow2);
    pow2 <<= 1;
  }

  // leading[j] = j-th forward difference at valid_from.
  std::vector<BigRational> leading{b.front()};
  std::vector<BigRational> diff = b;
  for (int j = 1; j <= degree + 1; ++j) {
    diff = finite_difference(diff);
    leading.push_back(diff.front());
  }
  for (std::size_t k = 0; k < diff.size(); ++k) {
    if (diff[k] != 0) {
      fit.verdict = FitResult::Verdict::fails_at;
      fit.failing_n = valid_from + static_cast<int>(k) + degree + 1;
      return fit;
    }
  }

  // p(n) = sum_j leading[j] * binomial(n - valid_from, j), expanded in n.
  std::vector<BigRational> poly(degree + 1, BigRational(0));
  std::vector<BigRational> basis{BigRational(1)};
  for (int j = 0; j <= degree; ++j) {
    for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += leading[j] * basis[k];
    // basis *= (n - valid_from - j) / (j + 1)
    std::vector<BigRational> next(basis.size() + 1, BigRational(0));
    const BigRational shift(valid_from + j);
    const BigRational scale(1, j + 1);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      next[k + 1] += basis[k] * scale;
      next[k] -= basis[k] * shift * scale;
    }
    basis = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  fit.poly_coeffs = std::move(poly);
  fit.verdict = FitResult::Verdict::fits;
  return fit;
}

FitResult check_poly_times_2n(int r, int s, int n_max,
                              const EvalOptions& options) {
  if (r < 0 || s < 0) throw InvalidInput("r and s must be >= 0");
  const int degree = r + s;
  const int from = degree + 1;
  if (n_max < from + degree + 2) {
    FitResult fit;
    fit.valid_from = from;
    return fit;
  }
  const auto values = joint_sequence(JointEngine::P123_132, r, s, n_max, options);
  return fit_poly_times_2n(1, values, degree, from);
}

}  // namespace permfe
