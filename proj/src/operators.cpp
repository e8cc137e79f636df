#include "pnr/operators.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "pnr/errors.hpp"

namespace pnr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ParseError("invalid number '" + std::string(s) + "'");
  }
  return v;
}

std::vector<Complex> parse_list(std::string_view s) {
  std::vector<Complex> out;
  for (auto part : split(s, ',')) out.push_back(parse_complex(part));
  return out;
}

void append_number(std::ostringstream& os, Complex z) {
  os.precision(17);
  if (z.imag() == 0.0) {
    os << z.real();
    return;
  }
  if (z.real() != 0.0) os << z.real() << (z.imag() < 0.0 ? "" : "+");
  os << z.imag() << 'i';
}

void check_finite(const std::vector<Complex>& v) {
  for (const auto& z : v)
    if (!is_finite(z)) throw NonFiniteValue("PeriodSpec: non-finite entry");
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s), 0.0};

  s.remove_suffix(1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split_at = i;
      break;
    }
  }
  const std::string_view re_part = split_at == std::string_view::npos ? std::string_view{} : s.substr(0, split_at);
  std::string_view im_part = split_at == std::string_view::npos ? s : s.substr(split_at);
  im_part = trim(im_part);
  double im = 0.0;
  if (im_part.empty() || im_part == "+") im = 1.0;
  else if (im_part == "-") im = -1.0;
  else im = parse_real(im_part);
  const double re = re_part.empty() ? 0.0 : parse_real(re_part);
  return {re, im};
}

PeriodSpec PeriodSpec::make(std::vector<Complex> a, std::vector<Complex> b, std::vector<Complex> c) {
  if (a.size() < 2) throw DomainError("PeriodSpec: period must be at least 2");
  if (b.size() != a.size() || c.size() != a.size()) {
    throw DimensionMismatch("PeriodSpec: a, b and c must have the same length");
  }
  check_finite(a);
  check_finite(b);
  check_finite(c);
  return PeriodSpec{std::move(a), std::move(b), std::move(c)};
}

PeriodSpec PeriodSpec::from_word(std::string_view word) {
  word = trim(word);
  std::vector<Complex> a;
  if (word.find(',') != std::string_view::npos) {
    a = parse_list(word);
  } else {
    for (char ch : word) {
      if (ch < '0' || ch > '9') throw ParseError(std::string("invalid word letter '") + ch + "'");
      a.emplace_back(static_cast<double>(ch - '0'), 0.0);
    }
  }
  if (a.size() < 2) throw ParseError("word must have at least two letters");
  const std::size_t p = a.size();
  return make(std::move(a), std::vector<Complex>(p, 0.0), std::vector<Complex>(p, 1.0));
}

bool PeriodSpec::is_self_adjoint(double tol) const {
  const std::size_t p = period();
  for (std::size_t j = 0; j < p; ++j) {
    if (std::abs(b[j].imag()) > tol) return false;
    if (std::abs(c[j] - std::conj(a[(j + 1) % p])) > tol) return false;
  }
  return true;
}

PeriodSpec parse_spec(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty spec");
  std::optional<std::size_t> p;
  std::vector<Complex> a, b, c;
  std::optional<std::string_view> word;
  for (auto field : split(text, ';')) {
    field = trim(field);
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value, got '" + std::string(field) + "'");
    const auto key = trim(field.substr(0, eq));
    const auto value = trim(field.substr(eq + 1));
    if (key == "p") {
      const double v = parse_real(value);
      if (v < 2 || v != std::floor(v)) throw ParseError("p must be an integer >= 2");
      p = static_cast<std::size_t>(v);
    } else if (key == "a") {
      a = parse_list(value);
    } else if (key == "b") {
      b = parse_list(value);
    } else if (key == "c") {
      c = parse_list(value);
    } else if (key == "word") {
      word = value;
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'");
    }
  }
  if (word) {
    if (p || !a.empty() || !b.empty() || !c.empty()) throw ParseError("word form does not take p, a, b or c");
    return PeriodSpec::from_word(*word);
  }
  if (a.empty() || b.empty() || c.empty()) throw ParseError("spec needs a, b and c");
  const std::size_t period = p.value_or(a.size());
  auto widen = [&](std::vector<Complex>& v, const char* name) {
    if (v.size() == 1) v.assign(period, v.front());
    if (v.size() != period) throw ParseError(std::string(name) + " does not have p entries");
  };
  widen(a, "a");
  widen(b, "b");
  widen(c, "c");
  try {
    return PeriodSpec::make(std::move(a), std::move(b), std::move(c));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string format_spec(const PeriodSpec& spec) {
  std::ostringstream os;
  os << "p=" << spec.period();
  auto list = [&](const char* key, const std::vector<Complex>& v) {
    os << ';' << key << '=';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      append_number(os, v[i]);
    }
  };
  list("a", spec.a);
  list("b", spec.b);
  list("c", spec.c);
  return os.str();
}

double grid_angle(std::size_t k, std::size_t s) {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(s);
}

CMatrix build_truncation(const PeriodSpec& spec, std::size_t k) {
  if (k == 0) throw DomainError("build_truncation: k must be positive");
  const std::size_t p = spec.period();
  CMatrix t(k);
  for (std::size_t i = 0; i < k; ++i) {
    t(i, i) = spec.b[i % p];
    if (i + 1 < k) {
      t(i, i + 1) = spec.c[i % p];
      t(i + 1, i) = spec.a[(i + 1) % p];
    }
  }
  return t;
}

CMatrix build_circulant(const PeriodSpec& spec, std::size_t s) {
  if (s < 2) throw DomainError("build_circulant: s must be at least 2");
  const std::size_t m = s * spec.period();
  CMatrix cm = build_truncation(spec, m);
  cm(0, m - 1) = spec.a[0];
  cm(m - 1, 0) = spec.c[spec.period() - 1];
  return cm;
}

CMatrix build_symbol(const PeriodSpec& spec, double phi) {
  const std::size_t p = spec.period();
  CMatrix t = build_truncation(spec, p);
  t(0, p - 1) += spec.a[0] * std::polar(1.0, -phi);
  t(p - 1, 0) += spec.c[p - 1] * std::polar(1.0, phi);
  return t;
}

std::vector<SymbolSample> symbol_samples(const PeriodSpec& spec, std::size_t count) {
  std::vector<SymbolSample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double phi = grid_angle(k, count);
    out.push_back({phi, build_symbol(spec, phi)});
  }
  return out;
}

CVector fourier_vector(std::size_t p, std::size_t s, std::size_t j, std::size_t k) {
  if (p < 2 || s < 1 || j >= p || k >= s) throw DomainError("fourier_vector: index out of range");
  CVector u(s * p);
  const double scale = 1.0 / std::sqrt(static_cast<double>(s));
  for (std::size_t l = 0; l < s; ++l) {
    // rho_k^l = e^{2 pi i (k l mod s) / s}; reducing mod s keeps the angle small.
    u[j + l * p] = scale * std::polar(1.0, grid_angle((k * l) % s, s));
  }
  return u;
}

CMatrix build_block_unitary(std::size_t p, std::size_t s) {
  if (s < 2) throw DomainError("build_block_unitary: s must be at least 2");
  const std::size_t m = s * p;
  CMatrix u(m);
  for (std::size_t k = 0; k < s; ++k) {
    for (std::size_t j = 0; j < p; ++j) {
      const CVector col = fourier_vector(p, s, j, k);
      for (std::size_t i = 0; i < m; ++i) u(i, k * p + j) = col[i];
    }
  }
  return u;
}

CMatrix build_symbol_direct_sum(const PeriodSpec& spec, std::size_t s) {
  std::vector<CMatrix> blocks;
  blocks.reserve(s);
  for (std::size_t k = 0; k < s; ++k) blocks.push_back(build_symbol(spec, grid_angle(k, s)));
  return direct_sum(blocks);
}

ConjecturePair conjecture_matrices(std::size_t n) {
  if (n < 1) throw DomainError("conjecture_matrices: n must be positive");
  CMatrix bn(n + 1);
  for (std::size_t i = 0; i < n; ++i) bn(i, i + 1) = 1.0;
  CMatrix jn(n + 1);
  jn(0, 0) = 1.0;
  jn(n, n) = 1.0;
  return {bn + jn, bn - jn};
}

CVector lift_eigenvector(std::span<const Complex> v, double phi, std::size_t s) {
  const std::size_t p = v.size();
  CVector out(p * s);
  for (std::size_t l = 0; l < s; ++l) {
    const Complex ph = std::polar(1.0, static_cast<double>(l) * phi);
    for (std::size_t j = 0; j < p; ++j) out[l * p + j] = v[j] * ph;
  }
  return out;
}

}  // namespace pnr
