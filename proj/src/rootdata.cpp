#include "brstack/rootdata.hpp"

#include "brstack/error.hpp"

#include <cctype>
#include <charconv>

namespace brstack {
namespace {

void link(IntegerMatrix& c, int i, int j) {
  c(i, j) = -1;
  c(j, i) = -1;
}

}  // namespace

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 3; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw Error("invalid simple type " + std::string(1, family_letter(family)) + std::to_string(rank));
}

SimpleType SimpleType::parse(std::string_view name) {
  if (name.size() < 2) throw ParseError("bad simple type name '" + std::string(name) + "'");
  Family f;
  switch (std::toupper(static_cast<unsigned char>(name.front()))) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: throw ParseError("unknown root system family in '" + std::string(name) + "'");
  }
  int rank = 0;
  const char* first = name.data() + 1;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, rank);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("bad rank in simple type name '" + std::string(name) + "'");
  }
  return SimpleType(f, rank);
}

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

std::string SimpleType::name() const { return family_letter(family_) + std::to_string(rank_); }

IntegerMatrix cartan_matrix(const SimpleType& t) {
  const int n = t.rank();
  IntegerMatrix c(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;

  switch (t.family()) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      c(n - 2, n - 1) = -2;  // a_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(c, i, i + 1);
      c(n - 1, n - 2) = -2;  // a_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(c, i, i + 1);
      link(c, n - 3, n - 1);
      break;
    case Family::E:
      // 1-3-4-5-...-n with 2 attached to 4
      link(c, 0, 2);
      link(c, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(c, i, i + 1);
      break;
    case Family::F:
      link(c, 0, 1);
      link(c, 1, 2);
      link(c, 2, 3);
      c(1, 2) = -2;
      break;
    case Family::G:
      c(0, 1) = -1;
      c(1, 0) = -3;
      break;
  }
  return c;
}

std::vector<Integer> CenterLayout::moduli() const {
  std::vector<Integer> m;
  for (const auto& f : factors) m.insert(m.end(), f.moduli.begin(), f.moduli.end());
  return m;
}

FiniteAbelianGroup CenterLayout::group() const { return FiniteAbelianGroup::from_moduli(moduli()); }

CenterLayout center_layout(const std::vector<SimpleType>& factors) {
  if (factors.empty()) throw Error("a semisimple group needs at least one simple factor");
  CenterLayout layout;
  for (const SimpleType& t : factors) {
    const IntegerMatrix c = cartan_matrix(t);
    const SmithDecomposition snf = smith_normal_form(c);
    FactorCenter fc{t, {}, {}};
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < snf.diagonal.size(); ++i) {
      if (snf.diagonal[i] > 1) {
        fc.moduli.push_back(snf.diagonal[i]);
        kept.push_back(i);
      }
    }
    fc.coordinate_map = IntegerMatrix(kept.size(), c.cols());
    for (std::size_t r = 0; r < kept.size(); ++r)
      for (std::size_t j = 0; j < c.cols(); ++j) fc.coordinate_map(r, j) = snf.left(kept[r], j);
    layout.factors.push_back(std::move(fc));
  }
  return layout;
}

FiniteAbelianGroup center_of_simply_connected(const std::vector<SimpleType>& factors) {
  return center_layout(factors).group();
}

SemisimpleGroupSpec::SemisimpleGroupSpec(std::vector<SimpleType> factors,
                                         std::vector<std::vector<Integer>> central_generators)
    : SemisimpleGroupSpec(center_layout(factors), std::move(central_generators)) {}

SemisimpleGroupSpec::SemisimpleGroupSpec(CenterLayout layout, std::vector<std::vector<Integer>> central_generators)
    : layout_(std::move(layout)), generators_(std::move(central_generators)) {
  if (layout_.factors.empty()) throw Error("a semisimple group needs at least one simple factor");
  for (const auto& f : layout_.factors) factors_.push_back(f.type);
  const std::vector<Integer> moduli = layout_.moduli();
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    const auto& coords = generators_[g];
    if (coords.size() != moduli.size()) {
      throw Error("central generator " + std::to_string(g) + " has " + std::to_string(coords.size()) +
                  " coordinates; the center of " + name() + " has " + std::to_string(moduli.size()));
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (coords[i] < 0 || coords[i] >= moduli[i]) {
        throw Error("central generator " + std::to_string(g) + " coordinate " + std::to_string(i) +
                    " = " + coords[i].get_str() + " is outside [0, " + moduli[i].get_str() + ")");
      }
    }
  }
  subgroup_ = subgroup_structure(moduli, generators_);
}

SemisimpleGroupSpec SemisimpleGroupSpec::simply_connected(std::vector<SimpleType> factors) {
  return SemisimpleGroupSpec(std::move(factors), {});
}

SemisimpleGroupSpec SemisimpleGroupSpec::adjoint(std::vector<SimpleType> factors) {
  const std::size_t k = center_layout(factors).moduli().size();
  std::vector<std::vector<Integer>> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Integer> e(k, Integer(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return SemisimpleGroupSpec(std::move(factors), std::move(gens));
}

std::string SemisimpleGroupSpec::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += " x ";
    s += factors_[i].name();
  }
  return s;
}

FiniteAbelianGroup brauer_group_of_BG(const SemisimpleGroupSpec& spec) {
  return dual_group(spec.central_subgroup());
}

std::vector<SemisimpleGroupSpec> isogeny_quotients(const std::vector<SimpleType>& factors,
                                                   unsigned long bound) {
  const CenterLayout layout = center_layout(factors);
  std::vector<SemisimpleGroupSpec> out;
  for (auto& gens : enumerate_subgroup_generators(layout.moduli(), bound))
    out.emplace_back(layout, std::move(gens));
  return out;
}

}  // namespace brstack
