#include "toricres/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace toricres {

namespace {

using V = LatticeVector;

struct Term {
  long coeff;
  std::vector<long> exps;
};

Polynomial poly(std::initializer_list<Term> terms) {
  Polynomial f(3);
  for (const auto& t : terms) f.add_term(ExponentVector(t.exps), t.coeff);
  return f;
}

std::vector<V> sorted(std::vector<V> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

using Item = ListedItem;

struct FamilyData {
  std::vector<ExpectedCone> cones;
  std::map<std::string, std::vector<Item>> printed;
  std::map<std::string, std::vector<V>> corrected;
};

FamilyData data_A(int n) {
  const long m = n + 1;
  const Polynomial f = poly({{1, {1, 1, 0}}, {-1, {0, 0, m}}});
  FamilyData d;
  d.cones = {
      {"C1", Cone({V{m, 0, 1}, V{0, m, 1}}), f, std::nullopt},
      {"C2", Cone({V{0, 0, 1}, V{m, 0, 1}, V{0, m, 1}}), poly({{1, {1, 1, 0}}}), Hyperplane(V{0, 0, 1}, 1)},
      {"C3", Cone({V{1, 0, 0}, V{0, 1, 0}, V{m, 0, 1}, V{0, m, 1}}), poly({{-1, {0, 0, m}}}),
       Hyperplane(V{1, 1, -n}, 1)},
  };

  // Rows (k,0,1), (k-1,1,1), ..., (0,k,1) for k = n+1 down to 0.
  std::vector<Item> c2;
  for (long k = m; k >= 2; --k) c2.push_back(Item::progression(V{k, 0, 1}, V{k - 1, 1, 1}, V{0, k, 1}));
  c2.push_back(Item::point(V{1, 0, 1}));
  c2.push_back(Item::point(V{0, 1, 1}));
  c2.push_back(Item::point(V{0, 0, 1}));
  d.printed["C2"] = c2;
  d.printed["C3"] = {Item::progression(V{m, 0, 1}, V{n, 1, 1}, V{0, m, 1}), Item::point(V{1, 0, 0}),
                     Item::point(V{0, 1, 0})};

  std::vector<V> p2, p3{V{1, 0, 0}, V{0, 1, 0}};
  for (long a = 0; a <= m; ++a) {
    for (long b = 0; a + b <= m; ++b) p2.push_back(V{a, b, 1});
    p3.push_back(V{a, m - a, 1});
  }
  d.corrected["C2"] = sorted(p2);
  d.corrected["C3"] = sorted(p3);
  return d;
}

FamilyData data_D(int n) {
  const V c{2, n - 2, n - 1};
  const long e = n - 1;
  const Polynomial f = poly({{1, {0, 0, 2}}, {-1, {1, 2, 0}}, {-1, {e, 0, 0}}});
  FamilyData d;
  d.cones = {
      {"C1", Cone({c}), f, std::nullopt},
      {"C2", Cone({V{2, 0, 1}, c}), poly({{1, {0, 0, 2}}, {-1, {1, 2, 0}}}), std::nullopt},
      {"C3", Cone({V{0, 0, 1}, c}), poly({{-1, {1, 2, 0}}, {-1, {e, 0, 0}}}), std::nullopt},
      {"C4", Cone({V{0, 1, 0}, c}), poly({{1, {0, 0, 2}}, {-1, {e, 0, 0}}}), std::nullopt},
      {"C5", Cone({V{2, 0, 1}, V{0, 0, 1}, c}), poly({{-1, {1, 2, 0}}}), Hyperplane(V{0, 1, -1}, -1)},
      {"C6", Cone({V{0, 1, 0}, V{0, 0, 1}, c}), poly({{-1, {e, 0, 0}}}), Hyperplane(V{n - 2, -1, -1}, -1)},
      {"C7", Cone({V{1, 0, 0}, V{0, 1, 0}, V{2, 0, 1}, c}), poly({{1, {0, 0, 2}}}), Hyperplane(V{1, 1, -1}, 1)},
  };

  const Item two_row = Item::progression(V{2, 0, 1}, V{2, 1, 2}, c);
  if (n % 2 == 0) {
    const long h = (n - 2) / 2;
    d.printed["C5"] = {Item::progression(V{1, 0, 1}, V{1, 1, 2}, V{1, h, h + 1}), two_row, Item::point(V{0, 0, 1})};
    d.printed["C6"] = {Item::point(V{0, 0, 1}), Item::point(V{0, 1, 0}), Item::point(c),
                       Item::point(V{1, h, h + 1}), Item::point(V{1, 0, 0}), Item::point(V{0, 1, 0})};
    d.printed["C7"] = {two_row, Item::progression(V{1, 1, 1}, V{1, 2, 2}, std::nullopt), Item::point(V{1, 0, 0}),
                       Item::point(V{0, 1, 0})};
  } else {
    const long h = (n - 1) / 2;
    d.printed["C5"] = {Item::progression(V{1, 1, 2}, V{1, 2, 3}, V{1, h - 1, h}), two_row, Item::point(V{0, 0, 1})};
    d.printed["C6"] = {Item::point(V{0, 0, 1}), Item::point(V{0, 1, 0}), Item::point(c), Item::point(V{1, h, h})};
    d.printed["C7"] = {two_row, Item::progression(V{1, 1, 1}, V{1, 2, 2}, V{1, h, h}), Item::point(V{1, 0, 0}),
                       Item::point(V{0, 1, 0})};
  }

  std::vector<V> p5{V{0, 0, 1}}, p6{V{0, 1, 0}, V{0, 0, 1}, c}, p7{V{0, 1, 0}};
  for (long y = 0; y <= (n - 2) / 2; ++y) p5.push_back(V{1, y, y + 1});
  for (long y = 0; y <= (n - 1) / 2; ++y) p7.push_back(V{1, y, y});
  for (long y = 0; y <= n - 2; ++y) {
    p5.push_back(V{2, y, y + 1});
    p7.push_back(V{2, y, y + 1});
  }
  p6.push_back(n % 2 == 0 ? V{1, (n - 2) / 2, n / 2} : V{1, (n - 1) / 2, (n - 1) / 2});
  d.corrected["C5"] = sorted(p5);
  d.corrected["C6"] = sorted(p6);
  d.corrected["C7"] = sorted(p7);
  return d;
}

// Shared layout of E_6 and E_8: f = z^2 + y^3 + x^k with center c.
FamilyData data_E_even(long k, const V& c) {
  const Polynomial z2 = poly({{1, {0, 0, 2}}}), y3 = poly({{1, {0, 3, 0}}}), xk = poly({{1, {k, 0, 0}}});
  FamilyData d;
  d.cones = {
      {"C1", Cone({c}), poly({{1, {0, 0, 2}}, {1, {0, 3, 0}}, {1, {k, 0, 0}}}), std::nullopt},
      {"C2", Cone({V{1, 0, 0}, c}), poly({{1, {0, 0, 2}}, {1, {0, 3, 0}}}), std::nullopt},
      {"C3", Cone({V{0, 0, 1}, c}), poly({{1, {0, 3, 0}}, {1, {k, 0, 0}}}), std::nullopt},
      {"C4", Cone({V{0, 1, 0}, c}), poly({{1, {0, 0, 2}}, {1, {k, 0, 0}}}), std::nullopt},
      {"C5", Cone({V{1, 0, 0}, V{0, 0, 1}, c}), y3, Hyperplane(V{1, -2, 1}, 1)},
      {"C6", Cone({V{0, 1, 0}, V{0, 0, 1}, c}), xk, Hyperplane(V{k - 1, -1, -1}, -1)},
      {"C7", Cone({V{1, 0, 0}, V{0, 1, 0}, c}), z2, Hyperplane(V{1, 1, -1}, 1)},
  };
  return d;
}

std::vector<Item> points(std::initializer_list<V> ps) {
  std::vector<Item> out;
  for (const auto& p : ps) out.push_back(Item::point(p));
  return out;
}

FamilyData data_E6() {
  FamilyData d = data_E_even(4, V{3, 4, 6});
  d.printed["C5"] = points({V{1, 0, 0}, V{0, 0, 1}, V{3, 4, 6}, V{1, 1, 2}, V{2, 2, 3}});
  d.printed["C6"] = points({V{0, 1, 0}, V{0, 0, 1}, V{3, 4, 6}, V{1, 1, 2}, V{2, 3, 4}});
  d.printed["C7"] = points({V{1, 0, 0}, V{0, 1, 0}, V{3, 4, 6}, V{1, 1, 1}, V{1, 2, 2}, V{2, 2, 3}, V{2, 3, 4}});
  d.corrected["C5"] = sorted({V{1, 0, 0}, V{0, 0, 1}, V{3, 4, 6}, V{1, 1, 2}, V{2, 2, 3}});
  d.corrected["C6"] = sorted({V{0, 1, 0}, V{0, 0, 1}, V{1, 2, 2}, V{2, 3, 4}, V{3, 4, 6}});
  d.corrected["C7"] = sorted({V{1, 0, 0}, V{0, 1, 0}, V{3, 4, 6}, V{1, 1, 1}, V{1, 2, 2}, V{2, 2, 3}, V{2, 3, 4}});
  return d;
}

FamilyData data_E7() {
  const V c{9, 6, 4};
  FamilyData d;
  d.cones = {
      {"C1", Cone({c}), poly({{1, {2, 0, 0}}, {1, {0, 3, 0}}, {1, {0, 1, 3}}}), std::nullopt},
      {"C2", Cone({V{1, 0, 0}, c}), poly({{1, {0, 3, 0}}, {1, {0, 1, 3}}}), std::nullopt},
      {"C3", Cone({V{0, 0, 1}, c}), poly({{1, {2, 0, 0}}, {1, {0, 3, 0}}}), std::nullopt},
      {"C4", Cone({V{1, 2, 0}, c}), poly({{1, {2, 0, 0}}, {1, {0, 1, 3}}}), std::nullopt},
      {"C5", Cone({V{1, 0, 0}, V{0, 0, 1}, c}), poly({{1, {0, 3, 0}}}), Hyperplane(V{1, -2, 1}, 1)},
      {"C6", Cone({V{0, 1, 0}, V{0, 0, 1}, V{1, 2, 0}, c}), poly({{1, {2, 0, 0}}}), Hyperplane(V{1, -1, -1}, -1)},
      {"C7", Cone({V{1, 0, 0}, V{1, 2, 0}, c}), poly({{1, {0, 1, 3}}}), Hyperplane(V{1, 0, -2}, 1)},
  };
  d.printed["C5"] = points({V{1, 0, 0}, V{0, 0, 1}, c, V{6, 4, 3}, V{5, 3, 2}, V{3, 2, 2}, V{2, 1, 1}});
  d.printed["C6"] = points({V{0, 1, 0}, V{0, 0, 1}, c, V{1, 2, 0}, V{7, 5, 3}, V{5, 4, 2}, V{3, 3, 1}, V{6, 4, 3},
                            V{3, 2, 2}, V{4, 3, 2}, V{2, 2, 1}, V{1, 1, 1}});
  d.printed["C7"] = points({V{1, 0, 0}, V{1, 2, 0}, c, V{1, 1, 1}, V{3, 2, 1}, V{5, 3, 2}, V{7, 5, 3}, V{5, 4, 2},
                            V{3, 3, 1}});
  d.corrected["C5"] = sorted({V{1, 0, 0}, V{0, 0, 1}, V{2, 1, 1}, V{3, 2, 2}, V{5, 3, 2}, V{6, 4, 3}, c});
  d.corrected["C6"] = sorted({V{0, 1, 0}, V{0, 0, 1}, V{1, 1, 1}, V{1, 2, 0}, V{2, 2, 1}, V{3, 2, 2}, V{3, 3, 1},
                              V{4, 3, 2}, V{5, 4, 2}, V{6, 4, 3}, V{7, 5, 3}, c});
  d.corrected["C7"] = sorted({V{1, 0, 0}, V{1, 1, 0}, V{1, 2, 0}, V{3, 2, 1}, V{3, 3, 1}, V{5, 3, 2}, V{5, 4, 2},
                              V{7, 5, 3}, c});
  return d;
}

FamilyData data_E8() {
  const V c{6, 10, 15};
  FamilyData d = data_E_even(5, c);
  d.printed["C5"] = points({V{0, 1, 0}, V{0, 0, 1}, c, V{2, 2, 3}, V{3, 4, 6}, V{4, 6, 9}, V{5, 8, 12}, V{1, 1, 2},
                            V{2, 3, 5}, V{3, 5, 8}});
  d.printed["C6"] = points({V{0, 1, 0}, V{0, 0, 1}, c, V{2, 4, 5}, V{4, 7, 10}, V{3, 5, 8}, V{1, 2, 3}});
  d.printed["C7"] = points({V{1, 0, 0}, V{0, 1, 0}, c, V{2, 2, 3}, V{3, 4, 6}, V{4, 6, 9}, V{5, 8, 12}, V{2, 4, 5},
                            V{4, 7, 10}, V{1, 2, 2}, V{2, 3, 4}, V{3, 4, 6}, V{3, 5, 7}, V{1, 2, 2}, V{2, 3, 4}});
  d.corrected["C5"] = sorted({V{1, 0, 0}, V{0, 0, 1}, V{1, 1, 2}, V{2, 2, 3}, V{2, 3, 5}, V{3, 4, 6}, V{3, 5, 8},
                              V{4, 6, 9}, V{5, 8, 12}, c});
  d.corrected["C6"] = sorted({V{0, 1, 0}, V{0, 0, 1}, V{1, 2, 3}, V{2, 4, 5}, V{3, 5, 8}, V{4, 7, 10}, c});
  d.corrected["C7"] = sorted({V{1, 0, 0}, V{0, 1, 0}, V{1, 1, 1}, V{1, 2, 2}, V{2, 2, 3}, V{2, 3, 4}, V{2, 4, 5},
                              V{3, 4, 6}, V{3, 5, 7}, V{4, 6, 9}, V{4, 7, 10}, V{5, 8, 12}, c});
  return d;
}

FamilyData family_data(const FamilyId& id) {
  switch (id.family) {
    case Family::A: return data_A(id.n);
    case Family::D: return data_D(id.n);
    case Family::E6: return data_E6();
    case Family::E7: return data_E7();
    case Family::E8: return data_E8();
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

}  // namespace

std::string FamilyId::name() const {
  switch (family) {
    case Family::A: return "A_" + std::to_string(n);
    case Family::D: return "D_" + std::to_string(n);
    case Family::E6: return "E_6";
    case Family::E7: return "E_7";
    case Family::E8: return "E_8";
  }
  return "?";
}

FamilyId make_family(Family f, int n) {
  switch (f) {
    case Family::A:
      if (n < 1) throw Error(ErrorKind::BadParameter, "A_n needs n >= 1, got " + std::to_string(n));
      return {f, n};
    case Family::D:
      if (n < 4) throw Error(ErrorKind::BadParameter, "D_n needs n >= 4, got " + std::to_string(n));
      return {f, n};
    case Family::E6: return {f, 6};
    case Family::E7: return {f, 7};
    case Family::E8: return {f, 8};
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

FamilyId parse_family(std::string_view name, std::optional<int> n) {
  std::string s;
  for (char ch : name)
    if (ch != '_') s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  // "D5" and "D_5" carry the parameter inline; it must agree with n when both are given
  if (s.size() > 1 && (s[0] == 'A' || s[0] == 'D' || s[0] == 'E') &&
      std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    if (s.size() > 6) throw Error(ErrorKind::BadParameter, "family parameter too large in '" + std::string(name) + "'");
    const int inline_n = std::stoi(s.substr(1));
    if (n && *n != inline_n) throw Error(ErrorKind::BadParameter, "conflicting parameters for '" + std::string(name) + "'");
    n = inline_n;
    s.resize(1);
  }
  if (s == "A" || s == "D") {
    if (!n) throw Error(ErrorKind::BadParameter, "family " + s + " needs a parameter n");
    return make_family(s == "A" ? Family::A : Family::D, *n);
  }
  if (s == "E" && n) s += std::to_string(*n);
  if (s == "E6") return make_family(Family::E6);
  if (s == "E7") return make_family(Family::E7);
  if (s == "E8") return make_family(Family::E8);
  throw Error(ErrorKind::BadParameter, "unknown family '" + std::string(name) + "'");
}

std::vector<FamilyId> catalog_families(int max_n) {
  std::vector<FamilyId> out;
  for (int n = 1; n <= max_n; ++n) out.push_back(make_family(Family::A, n));
  for (int n = 4; n <= max_n; ++n) out.push_back(make_family(Family::D, n));
  out.push_back(make_family(Family::E6));
  out.push_back(make_family(Family::E7));
  out.push_back(make_family(Family::E8));
  return out;
}

Polynomial ade_polynomial(const FamilyId& id) {
  const FamilyId v = make_family(id.family, id.n);
  switch (v.family) {
    case Family::A: return poly({{1, {1, 1, 0}}, {-1, {0, 0, v.n + 1}}});
    case Family::D: return poly({{1, {0, 0, 2}}, {-1, {1, 2, 0}}, {-1, {v.n - 1, 0, 0}}});
    case Family::E6: return poly({{1, {0, 0, 2}}, {1, {0, 3, 0}}, {1, {4, 0, 0}}});
    case Family::E7: return poly({{1, {2, 0, 0}}, {1, {0, 3, 0}}, {1, {0, 1, 3}}});
    case Family::E8: return poly({{1, {0, 0, 2}}, {1, {0, 3, 0}}, {1, {5, 0, 0}}});
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

ComponentCount expected_component_count(const FamilyId& id) {
  const FamilyId v = make_family(id.family, id.n);
  switch (v.family) {
    case Family::A: return {v.n, v.n};
    case Family::D: return {v.n, 2 * v.n - 3};
    case Family::E6: return {6, 11};
    case Family::E7: return {7, 17};
    case Family::E8: return {8, 29};
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

std::vector<ExpectedCone> expected_cones(const FamilyId& id) {
  return family_data(make_family(id.family, id.n)).cones;
}

std::vector<LatticeVector> materialize(const std::vector<ListedItem>& items) {
  std::vector<V> out;
  for (const auto& it : items) {
    out.push_back(it.first);
    if (!it.second) continue;
    out.push_back(*it.second);
    if (!it.last) continue;
    const V step = *it.second - it.first;
    const Integer reach = dot(*it.last - it.first, step);
    bool hit = *it.last == it.first || *it.last == *it.second;
    for (V p = *it.second + step; dot(p - it.first, step) <= reach; p += step) {
      out.push_back(p);
      hit |= p == *it.last;
    }
    if (!hit) out.push_back(*it.last);
  }
  return out;
}

Errata compare_listing(const std::vector<ListedItem>& printed, const std::vector<LatticeVector>& corrected) {
  Errata e;
  const auto verbatim = materialize(printed);
  std::map<V, int> count;
  for (const auto& p : verbatim) ++count[p];
  for (const auto& [p, k] : count) {
    if (k > 1) e.duplicates.push_back(p);
    if (!std::binary_search(corrected.begin(), corrected.end(), p)) e.spurious.push_back(p);
  }
  for (const auto& p : corrected)
    if (!count.count(p)) e.missing.push_back(p);
  e.garbled = std::any_of(printed.begin(), printed.end(), [](const ListedItem& it) { return it.garbled; });
  return e;
}

ProfileListing expected_profile_points(const FamilyId& id, std::string_view cone_id) {
  FamilyData d = family_data(make_family(id.family, id.n));
  const std::string key(cone_id);
  auto it = d.printed.find(key);
  if (it == d.printed.end()) {
    throw Error(ErrorKind::InvalidArgument, id.name() + " has no printed point list for " + key);
  }
  ProfileListing out;
  out.cone_id = key;
  out.printed = it->second;
  out.verbatim = materialize(out.printed);
  out.corrected = d.corrected.at(key);
  out.errata = compare_listing(out.printed, out.corrected);
  return out;
}

std::vector<ProfileListing> expected_profile_listings(const FamilyId& id) {
  const FamilyData d = family_data(make_family(id.family, id.n));
  std::vector<ProfileListing> out;
  for (const auto& [key, items] : d.printed) out.push_back(expected_profile_points(id, key));
  return out;
}

}  // namespace toricres
