#include "descentlab/serialize.hpp"

#include <fstream>

namespace descentlab {

std::string canonical_dump(const json& j) { return j.dump(); }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

std::vector<digit_t> digits_from_json(const json& j) {
  require(j.is_array(), Errc::IoError, "element encoding must be an array");
  std::vector<digit_t> v;
  for (const auto& x : j) v.push_back(x.get<digit_t>());
  return v;
}

}  // namespace

json field_to_json(const Field& f) {
  json j;
  j["p"] = f.p();
  j["n"] = f.n();
  j["modulus"] = f.modulus();
  if (!f.has_power_basis()) j["basis"] = f.basis();
  return j;
}

std::shared_ptr<const Field> field_from_json(const json& j) {
  require(j.contains("p") && j.contains("n"), Errc::IoError, "field needs p and n");
  digit_t p = j.at("p").get<digit_t>();
  digit_t n = j.at("n").get<digit_t>();
  std::vector<digit_t> modulus;
  if (j.contains("modulus")) {
    for (const auto& x : j.at("modulus")) modulus.push_back(x.get<digit_t>());
  } else {
    require(n == 1, Errc::IoError, "extension field needs an explicit modulus");
    modulus = {0, 1};
  }
  require(modulus.size() == static_cast<std::size_t>(n) + 1, Errc::IoError,
          "modulus degree must equal n");
  if (j.contains("basis")) {
    std::vector<std::vector<digit_t>> basis;
    for (const auto& b : j.at("basis")) basis.push_back(digits_from_json(b));
    return Field::make(p, std::move(modulus), std::move(basis));
  }
  return Field::make(p, std::move(modulus));
}

json unipoly_to_json(const UniPoly& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json e;
    e["e"] = t.e;
    e["c"] = t.c.digits();
    terms.push_back(std::move(e));
  }
  json j;
  j["terms"] = std::move(terms);
  return j;
}

UniPoly unipoly_from_json(const json& j, const Field* k) {
  std::vector<UTerm> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({t.at("e").get<std::uint64_t>(), k->from_digits(digits_from_json(t.at("c")))});
  return UniPoly(k, std::move(terms));
}

json multipoly_to_json(const MultiPoly& g) {
  json terms = json::array();
  for (const auto& t : g.terms()) {
    json e;
    e["m"] = t.m.exps();
    e["c"] = t.c.digits();
    terms.push_back(std::move(e));
  }
  json j;
  j["terms"] = std::move(terms);
  return j;
}

MultiPoly multipoly_from_json(const json& j, const Field* f, std::uint32_t nvars) {
  std::vector<MTerm> terms;
  for (const auto& t : j.at("terms")) {
    std::vector<std::uint32_t> e;
    for (const auto& x : t.at("m")) e.push_back(x.get<std::uint32_t>());
    require(e.size() == nvars, Errc::IoError, "monomial arity");
    terms.push_back({Monomial(std::move(e)), f->from_digits(digits_from_json(t.at("c")))});
  }
  return MultiPoly(f, nvars, std::move(terms));
}

json affine_to_json(const AffineMap& m) {
  json a = json::array();
  for (const auto& row : m.a()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.digits());
    a.push_back(std::move(r));
  }
  json b = json::array();
  for (const auto& x : m.b()) b.push_back(x.digits());
  json j;
  j["A"] = std::move(a);
  j["b"] = std::move(b);
  return j;
}

AffineMap affine_from_json(const json& j, const Field* f) {
  std::vector<std::vector<Fe>> a;
  for (const auto& row : j.at("A")) {
    std::vector<Fe> r;
    for (const auto& x : row) r.push_back(f->from_digits(digits_from_json(x)));
    a.push_back(std::move(r));
  }
  std::vector<Fe> b;
  for (const auto& x : j.at("b")) b.push_back(f->from_digits(digits_from_json(x)));
  return AffineMap(f, std::move(a), std::move(b));
}

json system_to_json(const PolySystem& sys) {
  json j;
  j["flavor"] = flavor_name(sys.flavor);
  j["nvars"] = sys.nvars;
  if (sys.ext) j["field"] = field_to_json(*sys.ext);
  if (!sys.ext || !sys.coeff->same(*sys.ext)) j["coeff_field"] = field_to_json(*sys.coeff);
  if (!sys.uni.empty()) {
    // descent flavors are reconstructed from the univariate set on load
    json u = json::array();
    for (const auto& f : sys.uni) u.push_back(unipoly_to_json(f));
    j["uni"] = std::move(u);
  }
  if (sys.flavor == Flavor::GENERIC) {
    json m = json::array();
    for (const auto& g : sys.gens) m.push_back(multipoly_to_json(g));
    j["multi"] = std::move(m);
  }
  return j;
}

PolySystem system_from_json(const json& j) {
  Flavor flavor = flavor_from_name(j.at("flavor").get<std::string>());
  if (flavor == Flavor::GENERIC) {
    auto coeff = field_from_json(j.contains("coeff_field") ? j.at("coeff_field") : j.at("field"));
    std::uint32_t nvars = j.at("nvars").get<std::uint32_t>();
    std::vector<MultiPoly> gens;
    for (const auto& g : j.at("multi"))
      gens.push_back(multipoly_from_json(g, coeff.get(), nvars));
    return make_generic(coeff, nvars, std::move(gens));
  }
  auto ext = field_from_json(j.at("field"));
  std::vector<UniPoly> uni;
  for (const auto& f : j.at("uni")) uni.push_back(unipoly_from_json(f, ext.get()));
  return build_system(ext, std::move(uni), flavor);
}

std::uint64_t system_hash(const PolySystem& sys) {
  return fnv1a(canonical_dump(system_to_json(sys)));
}

json keypair_to_json(const HfeKeyPair& kp) {
  json j;
  j["params"] = {{"q", kp.params.q}, {"n", kp.params.n}, {"t", kp.params.t},
                 {"seed", kp.params.seed}};
  j["field"] = field_to_json(*kp.ext);
  json pub = json::array();
  for (const auto& p : kp.pub) pub.push_back(multipoly_to_json(p));
  j["public"] = std::move(pub);
  j["private"] = {{"f", unipoly_to_json(kp.f)},
                  {"S", affine_to_json(kp.S)},
                  {"T", affine_to_json(kp.T)}};
  return j;
}

HfeKeyPair keypair_from_json(const json& j) {
  const auto& pj = j.at("params");
  std::uint32_t q = pj.at("q").get<std::uint32_t>();
  std::uint32_t n = pj.at("n").get<std::uint32_t>();
  std::uint32_t t = pj.at("t").get<std::uint32_t>();
  std::uint64_t seed = pj.at("seed").get<std::uint64_t>();
  auto ext = field_from_json(j.at("field"));
  auto base = Field::make_prime(q);
  UniPoly f = unipoly_from_json(j.at("private").at("f"), ext.get());
  AffineMap S = affine_from_json(j.at("private").at("S"), base.get());
  AffineMap T = affine_from_json(j.at("private").at("T"), base.get());
  std::vector<MultiPoly> pub;
  for (const auto& p : j.at("public")) pub.push_back(multipoly_from_json(p, base.get(), n));
  return HfeKeyPair{{q, n, t, seed}, base, ext, std::move(f), std::move(S), std::move(T),
                    std::move(pub)};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Errc::IoError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(Errc::IoError, "parse error in " + path + ": " + e.what());
  }
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  require(out.good(), Errc::IoError, "cannot open " + path + " for writing");
  out << canonical_dump(j) << "\n";
}

}  // namespace descentlab
