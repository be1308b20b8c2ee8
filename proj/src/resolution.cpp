#include "coxgenus/resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "coxgenus/errors.hpp"

namespace coxgenus {

std::string to_string(Representation rep) {
  return rep == Representation::Sign ? "sign" : "trivial";
}

Representation representation_from_string(const std::string& name) {
  if (name == "sign") return Representation::Sign;
  if (name == "trivial") return Representation::Trivial;
  throw InputError("representation must be 'sign' or 'trivial'");
}

Flag::Flag(std::vector<std::uint8_t> multiplicities) : mult_(std::move(multiplicities)) {}

Flag Flag::from_levels(int rank, const std::vector<Subset>& levels) {
  std::vector<std::uint8_t> mult(rank, 0);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0 && !levels[i].is_subset_of(levels[i - 1]))
      throw std::invalid_argument("flag levels must be nested");
    for (int s : levels[i].members()) ++mult[s];
  }
  return Flag(std::move(mult));
}

int Flag::total() const {
  int t = 0;
  for (auto a : mult_) t += a;
  return t;
}

int Flag::length() const {
  return mult_.empty() ? 0 : *std::max_element(mult_.begin(), mult_.end());
}

Subset Flag::level(int i) const {
  Subset out;
  for (std::size_t s = 0; s < mult_.size(); ++s) {
    if (mult_[s] >= i) out = out.with(static_cast<int>(s));
  }
  return out;
}

std::vector<Subset> Flag::levels() const {
  std::vector<Subset> out;
  for (int i = 1; i <= length(); ++i) out.push_back(level(i));
  return out;
}

std::string Flag::describe(const CoxeterSystem& sys) const {
  std::string out = "(";
  const auto ls = levels();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i > 0) out += " > ";
    out += sys.describe(ls[i]);
  }
  return out + ")";
}

std::vector<Flag> enumerate_flags(const NerveComplex& K, int k) {
  const int n = K.system().rank();
  std::vector<Flag> out;
  std::vector<std::uint8_t> mult(n, 0);
  // Assign multiplicities generator by generator; supports stay in K.
  auto recurse = [&](auto&& self, int s, int remaining, Subset support) -> void {
    if (remaining == 0) {
      out.emplace_back(mult);
      return;
    }
    if (s == n) return;
    self(self, s + 1, remaining, support);
    const Subset with_s = support.with(s);
    if (!K.contains(with_s)) return;
    for (int a = 1; a <= remaining; ++a) {
      mult[s] = static_cast<std::uint8_t>(a);
      self(self, s + 1, remaining - a, with_s);
    }
    mult[s] = 0;
  };
  recurse(recurse, 0, k, Subset{});
  std::sort(out.begin(), out.end());
  return out;
}

Integer flag_count_bound(int rank, int k) {
  if (rank == 0) return k == 0 ? 1 : 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(rank + k - 1),
               static_cast<unsigned long>(k));
  return out;
}

ParabolicTables::ParabolicTables(const NerveComplex& K, int max_size, std::size_t cap)
    : system_(K.system()) {
  for (int k = 0; k <= std::min(max_size, K.vd()); ++k) {
    for (Subset J : K.simplices(k)) {
      try {
        tables_.emplace(J.bits(), materialize_group(system_, J, cap));
      } catch (const CapExceeded& e) {
        over_cap_.emplace(J.bits(), e.order());
      }
    }
  }
}

const FiniteGroupTable& ParabolicTables::get(Subset J) const {
  if (auto it = tables_.find(J.bits()); it != tables_.end()) return it->second;
  if (auto it = over_cap_.find(J.bits()); it != over_cap_.end())
    throw CapExceeded(system_.describe(J), it->second);
  throw NotFiniteType("W_" + system_.describe(J) + " was not materialized (infinite or too large)");
}

std::vector<FlagBoundaryTerm> boundary_flag(const ParabolicTables& tables, const Flag& flag) {
  const int rank = static_cast<int>(flag.multiplicities().size());
  const auto levels = flag.levels();
  const int len = static_cast<int>(levels.size());
  std::vector<FlagBoundaryTerm> terms;

  int prefix = 0;  // sum_{j<i} |Gamma_j|
  for (int i = 1; i <= len; ++i) {
    const Subset gi = levels[i - 1];
    const Subset next = i < len ? levels[i] : Subset{};
    if (gi.size() <= next.size()) {
      prefix += gi.size();
      continue;
    }
    const FiniteGroupTable& table = tables.get(gi);
    const auto next_members = next.members();

    for (int tau : gi.members()) {
      const Subset face = gi.without(tau);
      const int mu = gi.count_below(tau) + 1;
      for (auto beta : minimal_coset_representatives(table, face)) {
        const auto beta_inv = table.inverse(beta);
        // a -> beta^{-1} a beta on Gamma_{i+1}, which must land in face.
        std::vector<int> image(rank, -1);
        bool conjugates = true;
        for (int a : next_members) {
          const auto c = table.multiply(table.multiply(beta_inv, table.generator_element(a)), beta);
          const auto g = table.as_generator(c);
          if (!g || !face.contains(*g)) {
            conjugates = false;
            break;
          }
          image[a] = *g;
        }
        if (!conjugates) continue;

        std::vector<Subset> target(levels.begin(), levels.begin() + (i - 1));
        target.push_back(face);
        int sigma = 0;
        for (int j = i + 1; j <= len; ++j) {
          const auto members = levels[j - 1].members();
          Subset moved;
          for (std::size_t x = 0; x < members.size(); ++x) {
            moved = moved.with(image[members[x]]);
            for (std::size_t y = x + 1; y < members.size(); ++y) {
              if (image[members[x]] > image[members[y]]) ++sigma;
            }
          }
          target.push_back(moved);
        }
        const unsigned ell = table.length(beta);
        const long alpha = static_cast<long>(i) * ell + prefix + mu + sigma;
        terms.push_back({Flag::from_levels(rank, target), table.normal_form(beta), ell,
                         alpha % 2 == 0 ? 1 : -1});
      }
    }
    prefix += gi.size();
  }
  return terms;
}

SpecializedResolution specialize_resolution(const NerveComplex& K, const ParabolicTables& tables,
                                            int kmax, Representation rep) {
  if (kmax < 0) throw std::invalid_argument("kmax must be non-negative");
  SpecializedResolution res;
  res.rep = rep;
  std::vector<std::size_t> dims;
  std::vector<IntMatrix> boundaries;
  std::map<Flag, std::size_t> previous;
  for (int k = 0; k <= kmax; ++k) {
    res.flags.push_back(enumerate_flags(K, k));
    const auto& cols = res.flags.back();
    dims.push_back(cols.size());
    if (k >= 1) {
      IntMatrix d(res.flags[k - 1].size(), cols.size());
      for (std::size_t c = 0; c < cols.size(); ++c) {
        for (const auto& term : boundary_flag(tables, cols[c])) {
          auto it = previous.find(term.target);
          if (it == previous.end())
            throw InternalError("boundary of " + cols[c].describe(K.system()) +
                                " leaves the flag basis");
          d(it->second, c) += term.coefficient(rep);
        }
      }
      boundaries.push_back(std::move(d));
    }
    previous.clear();
    for (std::size_t i = 0; i < cols.size(); ++i) previous.emplace(cols[i], i);
  }
  res.complex = ChainComplex(std::move(dims), std::move(boundaries));
  return res;
}

SpecializedResolution specialize_resolution(const CoxeterSystem& sys, int kmax, Representation rep,
                                            std::size_t cap) {
  const NerveComplex K = build_nerve(sys);
  const ParabolicTables tables(K, kmax, cap);
  return specialize_resolution(K, tables, kmax, rep);
}

bool SignExtensionReport::pass() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.pass; });
}

SignExtensionReport verify_sign_extension(const CoxeterSystem& sys, int kmax, Representation rep,
                                          std::size_t cap) {
  const NerveComplex K = build_nerve(sys);
  const ParabolicTables tables(K, kmax + 1, cap);
  const SpecializedResolution res = specialize_resolution(K, tables, kmax + 1, rep);

  SignExtensionReport report;
  report.rep = rep;
  for (int k = 0; k <= kmax; ++k) {
    SignExtensionDegree deg;
    deg.k = k;
    const auto& sources = res.flags[k];
    const auto& targets = res.flags[k + 1];
    const IntMatrix d = res.complex.boundary(k + 1);
    for (std::size_t r = 0; r < sources.size(); ++r) {
      if (sources[r].length() <= 1) ++deg.cochain_flags;
    }
    for (std::size_t c = 0; c < targets.size(); ++c) {
      const Flag& f = targets[c];
      if (f.length() <= 1) continue;
      if (f.level(2).size() == 1 && f.level(3).empty()) {
        ++deg.single_flags;
      } else {
        ++deg.other_flags;
      }
      // (delta f)(Gamma) = sum over the boundary of Gamma of f on length-1 flags.
      for (std::size_t r = 0; r < sources.size(); ++r) {
        if (sources[r].length() > 1 || d(r, c) == 0) continue;
        if (deg.pass) {
          deg.pass = false;
          deg.witness = f;
          deg.witness_source = sources[r];
          deg.witness_value = static_cast<int>(d(r, c).get_si());
        }
      }
    }
    report.degrees.push_back(std::move(deg));
  }
  return report;
}

}  // namespace coxgenus
