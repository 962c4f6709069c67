#include "alphax/families.hpp"

#include <stdexcept>

namespace alphax {

BaseId family_base(FamilyId f) {
  switch (f) {
    case FamilyId::T3: return BaseId::G1;
    case FamilyId::T4: return BaseId::G2;
    case FamilyId::T6: return BaseId::G3;
    case FamilyId::T7: return BaseId::K4;
  }
  throw std::logic_error("bad family id");
}

int base_order(BaseId b) {
  switch (b) {
    case BaseId::G1: return 7;
    case BaseId::G2: return 6;
    case BaseId::G3: return 5;
    case BaseId::K4: return 4;
  }
  throw std::logic_error("bad base id");
}

int base_order(FamilyId f) { return base_order(family_base(f)); }

int cycle_count_of(FamilyId f) {
  switch (f) {
    case FamilyId::T3: return 3;
    case FamilyId::T4: return 4;
    case FamilyId::T6: return 6;
    case FamilyId::T7: return 7;
  }
  throw std::logic_error("bad family id");
}

std::string family_name(FamilyId f) {
  switch (f) {
    case FamilyId::T3: return "T3";
    case FamilyId::T4: return "T4";
    case FamilyId::T6: return "T6";
    case FamilyId::T7: return "T7";
  }
  throw std::logic_error("bad family id");
}

FamilyId parse_family(const std::string& name) {
  if (name == "T3") return FamilyId::T3;
  if (name == "T4") return FamilyId::T4;
  if (name == "T6") return FamilyId::T6;
  if (name == "T7") return FamilyId::T7;
  throw std::invalid_argument("unknown family: " + name);
}

int family_max_degree(FamilyId f, int k) {
  if (k < 0) throw std::invalid_argument("negative pendant count");
  switch (f) {
    case FamilyId::T3: return k + 6;
    case FamilyId::T4: return k + 5;
    case FamilyId::T6: return k + 4;
    case FamilyId::T7: return k + 3;
  }
  throw std::logic_error("bad family id");
}

std::vector<int> nearly_equal_lengths(int total, int k) {
  if (k < 1) throw std::invalid_argument("need at least one path");
  if (total < k) throw std::invalid_argument("total shorter than path count");
  const int base = total / k;
  const int longer = total % k;  // this many paths get base+1
  std::vector<int> lengths;
  lengths.reserve(k);
  for (int i = 0; i < longer; ++i) lengths.push_back(base + 1);
  for (int i = longer; i < k; ++i) lengths.push_back(base);
  return lengths;
}

Graph base_graph(BaseId b) {
  switch (b) {
    case BaseId::G1:
      return Graph(7, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4},
                       {0, 5}, {5, 6}, {0, 6}});
    case BaseId::G2:
      return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                       {0, 4}, {4, 5}, {0, 5}});
    case BaseId::G3:
      return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}});
    case BaseId::K4:
      return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  throw std::logic_error("bad base id");
}

Graph construct_family(const FamilySpec& spec) {
  if (spec.pendants < 1) throw std::invalid_argument("pendant count must be >= 1");
  const int b = base_order(spec.family);
  if (spec.order < b + spec.pendants)
    throw std::invalid_argument("order too small for base plus pendant paths");
  const auto lengths = nearly_equal_lengths(spec.order - b, spec.pendants);
  return attach_pendant_paths(base_graph(family_base(spec.family)), 0, lengths);
}

}  // namespace alphax
