#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace kslogic::testing {

std::map<std::string, ExactMatrix> literal_set_o_matrices() {
  const GaussianRational I = GaussianRational::i();
  const GaussianRational quarter = Rational(1, 4);
  std::map<std::string, ExactMatrix> m;

  m.emplace("P_z++", ExactMatrix{{1, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  m.emplace("P_z+-", ExactMatrix{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  m.emplace("P_z-+", ExactMatrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}});
  m.emplace("P_z--", ExactMatrix{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}});

  m.emplace("P_x++", quarter * ExactMatrix{{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}});
  m.emplace("P_x+-", quarter * ExactMatrix{{1, -1, 1, -1}, {-1, 1, -1, 1}, {1, -1, 1, -1}, {-1, 1, -1, 1}});
  m.emplace("P_x-+", quarter * ExactMatrix{{1, 1, -1, -1}, {1, 1, -1, -1}, {-1, -1, 1, 1}, {-1, -1, 1, 1}});
  m.emplace("P_x--", quarter * ExactMatrix{{1, -1, -1, 1}, {-1, 1, 1, -1}, {-1, 1, 1, -1}, {1, -1, -1, 1}});

  m.emplace("P_y++", quarter * ExactMatrix{{1, -I, -I, -1}, {I, 1, 1, -I}, {I, 1, 1, -I}, {-1, I, I, 1}});
  m.emplace("P_y+-", quarter * ExactMatrix{{1, I, -I, 1}, {-I, 1, -1, -I}, {I, -1, 1, I}, {1, I, -I, 1}});
  m.emplace("P_y-+", quarter * ExactMatrix{{1, -I, I, 1}, {I, 1, -1, I}, {-I, -1, 1, -I}, {1, -I, I, 1}});
  m.emplace("P_y--", quarter * ExactMatrix{{1, I, I, -1}, {-I, 1, 1, I}, {-I, 1, 1, I}, {-1, -I, -I, 1}});
  return m;
}

std::vector<std::string> literal_labels() {
  return {"P_z++", "P_z+-", "P_z-+", "P_z--", "P_x++", "P_x+-", "P_x-+", "P_x--",
          "P_y++", "P_y+-", "P_y-+", "P_y--"};
}

std::size_t distinct_matrix_count(const OperatorSet& set) {
  std::vector<ExactMatrix> seen;
  for (const auto& c : set.contexts()) {
    for (const auto& p : c.members) {
      if (std::find(seen.begin(), seen.end(), p.matrix()) == seen.end()) seen.push_back(p.matrix());
    }
  }
  return seen.size();
}

std::size_t brute_force_coloring_count(const OperatorSet& set) {
  std::vector<ExactMatrix> vars;
  std::vector<std::vector<std::size_t>> contexts;
  for (const auto& c : set.contexts()) {
    std::vector<std::size_t> idx;
    for (const auto& p : c.members) {
      std::size_t v = 0;
      while (v < vars.size() && !(vars[v] == p.matrix())) ++v;
      if (v == vars.size()) vars.push_back(p.matrix());
      idx.push_back(v);
    }
    contexts.push_back(idx);
  }
  const std::size_t n = vars.size();
  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) orth[a][b] = a != b && (vars[a] * vars[b]).is_zero();
  }
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto bit = [mask](std::size_t v) { return ((mask >> v) & 1U) != 0; };
    bool ok = true;
    for (std::size_t c = 0; ok && c < contexts.size(); ++c) {
      int trues = 0;
      for (auto v : contexts[c]) trues += bit(v) ? 1 : 0;
      ok = trues == 1;
    }
    for (std::size_t a = 0; ok && a < n; ++a) {
      for (std::size_t b = a + 1; ok && b < n; ++b) ok = !(bit(a) && bit(b) && orth[a][b]);
    }
    count += ok ? 1 : 0;
  }
  return count;
}

SuperVerdict brute_force_supervaluation(const PartialBivalentValuation& v, const Context& c, const Formula& f,
                                        std::size_t* completions) {
  const std::size_t n = c.members.size();
  std::size_t admissible = 0;
  std::size_t true_in = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::map<std::string, bool> value;
    std::size_t trues = 0;
    bool consistent = true;
    for (std::size_t k = 0; k < n; ++k) {
      const bool t = ((mask >> k) & 1U) != 0;
      const auto& label = c.members[k].label();
      value[label] = t;
      trues += t ? 1 : 0;
      if (const auto known = v.value(label); known && (*known == TruthValue::True) != t) consistent = false;
    }
    if (!consistent || trues != 1) continue;
    ++admissible;
    bool holds = false;
    switch (f.kind) {
      case Formula::Kind::Atom: holds = value.at(f.labels[0]); break;
      case Formula::Kind::Conjunction:
        holds = true;
        for (const auto& l : f.labels) holds = holds && value.at(l);
        break;
      case Formula::Kind::Disjunction:
        for (const auto& l : f.labels) holds = holds || value.at(l);
        break;
    }
    true_in += holds ? 1 : 0;
  }
  if (completions) *completions = admissible;
  if (admissible == 0) return SuperVerdict::Inconsistent;
  if (true_in == admissible) return SuperVerdict::Supertrue;
  if (true_in == 0) return SuperVerdict::Superfalse;
  return SuperVerdict::Gap;
}

GaussianRational random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> part(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  return {Rational(part(rng), den(rng)), Rational(part(rng), den(rng))};
}

ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias) {
  std::uniform_int_distribution<int> coin(0, 9);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = coin(rng) < zero_bias ? GaussianRational(0) : random_scalar(rng);
  }
  return m;
}

OperatorSet random_small_set(std::mt19937& rng, std::size_t max_dim, std::size_t max_contexts) {
  const GaussianRational I = GaussianRational::i();
  const std::vector<GaussianRational> twists{1, -1, I, -I, 2, Rational(1, 2), GaussianRational(1, 1)};
  std::uniform_int_distribution<std::size_t> dim_dist(2, max_dim);
  std::uniform_int_distribution<std::size_t> ctx_dist(1, max_contexts);
  std::uniform_int_distribution<int> shape(0, 3);
  std::uniform_int_distribution<std::size_t> twist(0, twists.size() - 1);

  const std::size_t d = dim_dist(rng);
  const std::size_t nctx = ctx_dist(rng);
  auto unit = [d](std::size_t k) {
    ExactVector e(d);
    e[k] = 1;
    return e;
  };

  std::vector<Context> contexts;
  for (std::size_t c = 0; c < nctx; ++c) {
    std::vector<std::size_t> perm(d);
    for (std::size_t k = 0; k < d; ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    Context ctx{"K" + std::to_string(c + 1), {}};
    auto add = [&ctx, c](ExactMatrix m) {
      ctx.members.emplace_back(std::move(m), "k" + std::to_string(c + 1) + "m" + std::to_string(ctx.members.size() + 1));
    };
    std::size_t k = 0;
    while (k < d) {
      const int s = k + 1 < d ? shape(rng) : 0;
      if (s == 0) {  // coordinate ray
        add(ray_projector(unit(perm[k])));
        ++k;
        continue;
      }
      const ExactVector a = unit(perm[k]);
      const ExactVector b = unit(perm[k + 1]);
      if (s == 3) {  // rank-2 block
        add(ray_projector(a) + ray_projector(b));
      } else {  // rotated orthogonal pair: a + t b and -conj(t) a + b
        const GaussianRational t = twists[twist(rng)];
        add(ray_projector(a + t * b));
        add(ray_projector(-conjugate(t) * a + b));
      }
      k += 2;
    }
    contexts.push_back(std::move(ctx));
  }
  return OperatorSet(d, std::move(contexts));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace kslogic::testing
