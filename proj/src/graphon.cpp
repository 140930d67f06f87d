#include "graphlim/graphon.hpp"

#include "graphlim/densities.hpp"
#include "graphlim/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <functional>

namespace graphlim {

namespace mp = boost::multiprecision;

StepGraphon::StepGraphon(std::vector<Rational> weights,
                         std::vector<std::vector<Rational>> values,
                         std::string name)
    : weights_(std::move(weights)), name_(std::move(name)) {
  const auto k = weights_.size();
  if (k == 0) throw std::invalid_argument("graphon needs at least one block");
  if (values.size() != k)
    throw std::invalid_argument("graphon value matrix must be k x k");
  Rational total = 0;
  for (const auto &mu : weights_) {
    if (mu < 0) throw std::invalid_argument("graphon weight is negative");
    total += mu;
  }
  if (total != 1) throw std::invalid_argument("graphon weights must sum to 1");

  values_.reserve(k * k);
  for (const auto &row : values) {
    if (row.size() != k)
      throw std::invalid_argument("graphon value matrix must be k x k");
    for (const auto &v : row) {
      if (v < 0 || v > 1)
        throw std::invalid_argument("graphon value outside [0,1]");
      values_.push_back(v);
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (values_[i * k + j] != values_[j * k + i])
        throw std::invalid_argument("graphon value matrix is not symmetric");

  weight_den_ = 1;
  for (const auto &mu : weights_)
    weight_den_ = mp::lcm(weight_den_, BigInt(mp::denominator(mu)));
  for (const auto &mu : weights_)
    weight_num_.push_back(mp::numerator(mu) * (weight_den_ / mp::denominator(mu)));
  value_den_ = 1;
  for (const auto &v : values_)
    value_den_ = mp::lcm(value_den_, BigInt(mp::denominator(v)));
  for (const auto &v : values_)
    value_num_.push_back(mp::numerator(v) * (value_den_ / mp::denominator(v)));
}

namespace {

// Sums, over assignments of pattern vertices to blocks, the integer product
// of block weights and kernel factors; zero partial products are cut off.
Rational step_density(const Graph &f, const StepGraphon &w, bool induced) {
  const auto k = f.order();
  if (k == 0) return 1;
  const auto blocks = w.blocks();
  const auto order = search_order(f);

  std::vector<std::vector<std::size_t>> adjacent(k), non_adjacent(k);
  std::size_t factor_count = 0;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < p; ++q) {
      if (f.has_edge(order[p], order[q])) {
        adjacent[p].push_back(q);
        ++factor_count;
      } else if (induced) {
        non_adjacent[p].push_back(q);
        ++factor_count;
      }
    }

  std::vector<BigInt> complement_num;
  if (induced) {
    complement_num.reserve(blocks * blocks);
    for (std::size_t a = 0; a < blocks; ++a)
      for (std::size_t b = 0; b < blocks; ++b)
        complement_num.push_back(w.value_den() - w.value_num(a, b));
  }

  std::vector<std::size_t> assigned(k);
  std::vector<BigInt> partial(k + 1);
  partial[0] = 1;
  BigInt sum = 0;

  std::function<void(std::size_t)> extend = [&](std::size_t p) {
    for (std::size_t b = 0; b < blocks; ++b) {
      if (w.weight_num(b) == 0) continue;
      BigInt term = partial[p] * w.weight_num(b);
      for (auto q : adjacent[p]) {
        const auto &v = w.value_num(b, assigned[q]);
        if (v == 0) {
          term = 0;
          break;
        }
        term *= v;
      }
      if (term != 0)
        for (auto q : non_adjacent[p]) {
          const auto &v = complement_num[b * blocks + assigned[q]];
          if (v == 0) {
            term = 0;
            break;
          }
          term *= v;
        }
      if (term == 0) continue;
      if (p + 1 == k) {
        sum += term;
      } else {
        assigned[p] = b;
        partial[p + 1] = std::move(term);
        extend(p + 1);
      }
    }
  };
  extend(0);

  BigInt denominator = mp::pow(w.weight_den(), static_cast<unsigned>(k)) *
                       mp::pow(w.value_den(), static_cast<unsigned>(factor_count));
  return Rational(sum, denominator);
}

}  // namespace

Rational hom_density(const Graph &f, const StepGraphon &w) {
  return step_density(f, w, false);
}

Rational ind_density(const Graph &f, const StepGraphon &w) {
  return step_density(f, w, true);
}

Rational cycle_density(std::size_t k, const StepGraphon &w) {
  if (k < 3) throw std::invalid_argument("cycle_density: k must be >= 3");
  const auto m = w.blocks();
  // N = diag(weight_num) * value_num; t = trace(N^k) / (D L)^k.
  std::vector<BigInt> base(m * m), power(m * m), next(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      base[i * m + j] = w.weight_num(i) * w.value_num(i, j);
  power = base;
  for (std::size_t step = 1; step < k; ++step) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        BigInt acc = 0;
        for (std::size_t l = 0; l < m; ++l) acc += power[i * m + l] * base[l * m + j];
        next[i * m + j] = std::move(acc);
      }
    std::swap(power, next);
  }
  BigInt trace = 0;
  for (std::size_t i = 0; i < m; ++i) trace += power[i * m + i];
  return Rational(trace, mp::pow(w.weight_den() * w.value_den(),
                                 static_cast<unsigned>(k)));
}

bool is_random_free(const StepGraphon &w) {
  for (std::size_t i = 0; i < w.blocks(); ++i)
    for (std::size_t j = 0; j < w.blocks(); ++j) {
      if (w.weight(i) == 0 || w.weight(j) == 0) continue;
      const auto &v = w.value(i, j);
      if (v != 0 && v != 1) return false;
    }
  return true;
}

StepGraphon graphon_of_graph(const Graph &g) {
  const auto n = g.order();
  if (n == 0) throw std::invalid_argument("graphon_of_graph: empty graph");
  std::vector<Rational> weights(n, Rational(1, static_cast<long long>(n)));
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(n, 0));
  for (const auto &e : g.edges()) values[e.u][e.v] = values[e.v][e.u] = 1;
  return StepGraphon(std::move(weights), std::move(values), "graph");
}

StepGraphon constant_graphon(const Rational &p) {
  return StepGraphon({1}, {{p}}, "constant:" + to_string(p));
}

StepGraphon chordal_two_point() {
  const Rational half(1, 2);
  return StepGraphon({half, half}, {{0, half}, {half, 1}}, "chordal_two_point");
}

StepGraphon threshold_staircase(std::size_t k) {
  if (k == 0) throw std::invalid_argument("threshold_staircase: k must be >= 1");
  std::vector<Rational> weights(k, Rational(1, static_cast<long long>(k)));
  std::vector<std::vector<Rational>> values(k, std::vector<Rational>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i + j >= k) values[i][j] = 1;
  return StepGraphon(std::move(weights), std::move(values),
                     "threshold_staircase:" + std::to_string(k));
}

StepGraphon bipartite_two_point() {
  const Rational half(1, 2);
  return StepGraphon({half, half}, {{0, 1}, {1, 0}}, "bipartite_two_point");
}

StepGraphon named_graphon(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  const bool has_param = colon != std::string_view::npos;
  const auto param = has_param ? spec.substr(colon + 1) : std::string_view{};

  if ((name == "chordal_two_point" || name == "bipartite_two_point") && has_param)
    throw std::invalid_argument(std::string(name) + " takes no parameter");
  if (name == "chordal_two_point") return chordal_two_point();
  if (name == "bipartite_two_point") return bipartite_two_point();
  if (name == "constant") {
    if (!has_param) throw std::invalid_argument("constant needs a value p");
    const auto p = parse_rational(param);
    if (p < 0 || p > 1) throw std::invalid_argument("constant: p must lie in [0,1]");
    return constant_graphon(p);
  }
  if (name == "threshold_staircase") {
    if (!has_param) throw std::invalid_argument("threshold_staircase needs k");
    const auto k = parse_rational(param);
    if (mp::denominator(k) != 1 || k < 1 || k > 64)
      throw std::invalid_argument("threshold_staircase: k must be an integer in [1,64]");
    return threshold_staircase(mp::numerator(k).convert_to<std::size_t>());
  }
  throw UnknownName(std::string(spec));
}

std::vector<std::string> catalog_graphon_names() {
  return {"chordal_two_point", "bipartite_two_point", "constant:<p>",
          "threshold_staircase:<k>"};
}

std::string to_text(const StepGraphon &w) {
  const auto k = w.blocks();
  std::string out = std::to_string(k) + "\n";
  for (std::size_t i = 0; i < k; ++i) {
    if (i) out += ' ';
    out += to_string(w.weight(i));
  }
  out += '\n';
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (j) out += ' ';
      out += to_string(w.value(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    parts.push_back(text.substr(start, end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

std::vector<Rational> parse_row(std::string_view line, std::size_t expected,
                                std::size_t line_no) {
  std::vector<Rational> row;
  for (auto field : split(line, ' ')) row.push_back(parse_rational(field));
  if (row.size() != expected)
    throw ParseError("graphon line " + std::to_string(line_no) + ": expected " +
                     std::to_string(expected) + " values");
  return row;
}

}  // namespace

StepGraphon parse_graphon(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  const auto lines = split(text, '\n');
  const auto k_value = parse_rational(lines[0]);
  if (mp::denominator(k_value) != 1 || k_value < 1)
    throw ParseError("graphon: block count must be a positive integer");
  const auto k = mp::numerator(k_value).convert_to<std::size_t>();
  if (lines.size() != k + 2)
    throw ParseError("graphon: expected " + std::to_string(k + 2) + " lines");
  auto weights = parse_row(lines[1], k, 2);
  std::vector<std::vector<Rational>> values;
  for (std::size_t i = 0; i < k; ++i) values.push_back(parse_row(lines[i + 2], k, i + 3));
  try {
    return StepGraphon(std::move(weights), std::move(values), "file");
  } catch (const std::invalid_argument &e) {
    throw ParseError(std::string("graphon: ") + e.what());
  }
}

StepGraphon split_block(const StepGraphon &w, std::size_t b) {
  const auto k = w.blocks();
  if (b >= k) throw std::out_of_range("split_block: block out of range");
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < k; ++i) weights.push_back(w.weight(i));
  weights[b] /= 2;
  weights.push_back(weights[b]);
  std::vector<std::vector<Rational>> values(k + 1, std::vector<Rational>(k + 1));
  auto source = [&](std::size_t i) { return i == k ? b : i; };
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= k; ++j) values[i][j] = w.value(source(i), source(j));
  return StepGraphon(std::move(weights), std::move(values), w.name());
}

}  // namespace graphlim
