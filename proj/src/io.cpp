#include "pcl/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pcl {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Split on top-level " + " / " - " separators (outside any brackets); the
// leading sign of each piece is kept.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-') && i > 0 && s[i - 1] == ' ' &&
        i + 1 < s.size() && s[i + 1] == ' ') {
      out.push_back(trim(cur));
      cur = (c == '-') ? "-" : "";
      i += 2;
      continue;
    }
    cur += c;
    ++i;
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && c == sep) {
      out.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  out.push_back(trim(cur));
  return out;
}

bool looks_rational(const std::string& t) {
  if (t.empty()) return false;
  size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i >= t.size()) return false;
  for (; i < t.size(); ++i)
    if (!std::isdigit((unsigned char)t[i]) && t[i] != '/') return false;
  return true;
}

MultiIndex parse_multiindex(const std::string& t, int dim) {
  if (t.size() < 4 || t[0] != 'd' || t[1] != '[' || t.back() != ']')
    throw error("expected a multi-index 'd[...]' in '" + t + "'");
  MultiIndex I;
  for (const auto& p : split_on(t.substr(2, t.size() - 3), ',')) {
    try {
      I.push_back(std::stoi(p));
    } catch (const std::exception&) {
      throw error("bad multi-index entry '" + p + "'");
    }
  }
  if ((int)I.size() != dim)
    throw error("multi-index '" + t + "' has the wrong length");
  return I;
}

// One product term: optional sign/coefficient/symbol factors and atoms.
void parse_element_term(const ModulePtr& mod, const std::string& term,
                        const std::map<std::string, Rational>& symbols,
                        AlgebraElement& out) {
  std::string t = term;
  Rational coef = 1;
  if (!t.empty() && t[0] == '-') {
    coef = -1;
    t = trim(t.substr(1));
  }
  Monomial m;
  bool unit_seen = false;
  for (const auto& f : split_on(t, '*')) {
    if (f.empty()) throw error("empty factor in '" + term + "'");
    if (f == "1") {
      unit_seen = true;
      continue;
    }
    if (looks_rational(f)) {
      coef = coef * parse_rational(f);
      continue;
    }
    auto sym = symbols.find(f);
    if (sym != symbols.end()) {
      coef = coef * sym->second;
      continue;
    }
    // "d[...] name" or a bare generator name.
    auto sp = f.find(' ');
    MultiIndex I(mod->hopf->dim, 0);
    std::string name = f;
    if (sp != std::string::npos && f[0] == 'd' && f[1] == '[') {
      I = parse_multiindex(trim(f.substr(0, sp)), mod->hopf->dim);
      name = trim(f.substr(sp + 1));
    }
    m.push_back({I, mod->generator_index(name)});
  }
  if (m.empty()) {
    if (!unit_seen && !looks_rational(t) && symbols.find(t) == symbols.end() &&
        t != "1")
      throw error("term '" + term + "' has no factors");
    if (mod->kind != ModuleKind::symmetric_algebra)
      throw error("the unit monomial needs a symmetric algebra module");
    out = out + AlgebraElement::unit(mod) * coef;
    return;
  }
  AlgebraElement e(mod);
  if (mod->kind == ModuleKind::symmetric_algebra) {
    e = AlgebraElement::unit(mod) * coef;
    for (const auto& a : m)
      e = super_multiply(e, AlgebraElement::atom(mod, a.I, a.gen));
  } else {
    if (m.size() != 1)
      throw error("free module elements have a single atom per term");
    e = AlgebraElement::atom(mod, m[0].I, m[0].gen, coef);
  }
  out = out + e;
}

std::string strip_outer(const std::string& s, char open, char close) {
  if (s.size() < 2 || s.front() != open || s.back() != close) return s;
  int depth = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == open) ++depth;
    if (s[i] == close) --depth;
    if (depth == 0) return s;  // closes before the end
  }
  return trim(s.substr(1, s.size() - 2));
}

Rational json_rational(const json& v) {
  if (v.is_number_integer()) return Rational((long)v.get<long long>());
  return parse_rational(v.get<std::string>());
}

}  // namespace

AlgebraElement parse_element(const ModulePtr& mod, const std::string& s) {
  std::string t = trim(s);
  AlgebraElement out(mod);
  if (t.empty() || t == "0") return out;
  for (const auto& term : split_terms(t)) parse_element_term(mod, term, {}, out);
  return out;
}

PseudoTensor parse_tensor(const ModulePtr& mod, int arity, const std::string& s,
                          const std::map<std::string, Rational>& symbols) {
  std::string t = trim(s);
  if (t.empty() || t == "0") return PseudoTensor::zero(mod, arity);
  std::vector<std::pair<HTensor, AlgebraElement>> raw;
  AlgebraElement class_value(mod);
  for (const auto& term : split_terms(t)) {
    std::string body = term;
    Rational coef = 1;
    if (!body.empty() && body[0] == '-') {
      coef = -1;
      body = trim(body.substr(1));
    }
    if (arity == 0) {
      if (body.front() != '[' || body.back() != ']')
        throw error("arity-0 terms are written '[value]'");
      class_value =
          class_value +
          parse_element(mod, trim(body.substr(1, body.size() - 2))) * coef;
      continue;
    }
    auto open = body.find('(');
    if (open == std::string::npos)
      throw error("tensor term '" + term + "' lacks a slot tuple");
    // Leading factors before the slot tuple.
    for (const auto& f : split_on(trim(body.substr(0, open)), '*')) {
      if (f.empty()) continue;
      if (looks_rational(f)) {
        coef = coef * parse_rational(f);
        continue;
      }
      auto sym = symbols.find(f);
      if (sym == symbols.end()) throw error("unknown symbol '" + f + "'");
      coef = coef * sym->second;
    }
    int depth = 0;
    size_t close = open;
    for (; close < body.size(); ++close) {
      if (body[close] == '(') ++depth;
      if (body[close] == ')' && --depth == 0) break;
    }
    if (depth != 0) throw error("unbalanced slot tuple in '" + term + "'");
    auto slots = split_on(body.substr(open + 1, close - open - 1), '|');
    if ((int)slots.size() != arity)
      throw error("tensor term '" + term + "' has the wrong slot count");
    auto at = body.find('@', close);
    if (at == std::string::npos)
      throw error("tensor term '" + term + "' lacks '@ value'");
    AlgebraElement value =
        parse_element(mod, strip_outer(trim(body.substr(at + 1)), '(', ')'));
    std::vector<MultiIndex> key;
    for (const auto& sl : slots)
      key.push_back(sl == "1" ? MultiIndex(mod->hopf->dim, 0)
                              : parse_multiindex(sl, mod->hopf->dim));
    raw.emplace_back(HTensor::monomial(mod->hopf, key, coef), value);
  }
  if (arity == 0) return PseudoTensor::class_representative(class_value);
  if (raw.empty()) return PseudoTensor::zero(mod, arity);
  return normalize(mod, raw);
}

SpecData parse_spec(const std::string& json_text) {
  json j = json::parse(json_text);
  const auto& jh = j.at("hopf");
  int dim = jh.at("dim").get<int>();
  std::vector<std::vector<std::vector<Rational>>> c(
      dim, std::vector<std::vector<Rational>>(dim,
                                              std::vector<Rational>(dim, 0)));
  if (jh.contains("brackets")) {
    for (const auto& b : jh.at("brackets")) {
      int i = b.at("i").get<int>(), k = b.at("j").get<int>();
      for (const auto& t : b.at("terms")) {
        Rational v = json_rational(t.at("c"));
        int target = t.at("k").get<int>();
        c[i - 1][k - 1][target - 1] = v;
        c[k - 1][i - 1][target - 1] = -v;
      }
    }
  }
  auto d = make_lie_algebra(dim, c);
  std::vector<GeneratorSpec> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back({g.at("name").get<std::string>(),
                    g.value("parity", 0)});
  std::string kind_str = j.value("kind", std::string("symmetric_algebra"));
  ModuleKind kind;
  if (kind_str == "symmetric_algebra")
    kind = ModuleKind::symmetric_algebra;
  else if (kind_str == "free_module")
    kind = ModuleKind::free_module;
  else
    throw error("unknown module kind '" + kind_str + "'");
  auto mod = make_module(d, gens, kind);
  SpecData out;
  out.name = j.value("name", std::string("spec"));
  if (j.contains("central"))
    for (const auto& [sym, val] : j.at("central").items())
      out.central[sym] = json_rational(val);
  std::map<std::pair<int, int>, PseudoTensor> table;
  for (const auto& e : j.at("bracket_table")) {
    int a = mod->generator_index(e.at("a").get<std::string>());
    int b = mod->generator_index(e.at("b").get<std::string>());
    table[{a, b}] =
        parse_tensor(mod, 2, e.at("value").get<std::string>(), out.central);
  }
  out.algebra = make_pseudoalgebra(mod, table);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SpecData load_spec(const std::string& path) { return parse_spec(read_file(path)); }

OperadElement derivation_cochain(const ModulePtr& mod,
                                 const std::vector<AlgebraElement>& images) {
  if (images.size() != mod->generators.size())
    throw error("derivation cochain needs one image per generator");
  int shift = -1;
  for (size_t i = 0; i < images.size(); ++i) {
    if (images[i].is_zero()) continue;
    int s = (images[i].parity() + mod->generators[i].parity) % 2;
    if (shift == -1)
      shift = s;
    else if (shift != s)
      throw error("derivation cochain images have inconsistent parity");
  }
  if (shift == -1) shift = 0;
  ModulePtr m = mod;
  std::vector<AlgebraElement> imgs = images;
  auto fn = [m, imgs, shift](const Graph&,
                             const std::vector<AlgebraElement>& v) {
    AlgebraElement out(m);
    for (const auto& [mono, c] : v[0].terms()) {
      int before = 0;
      for (size_t i = 0; i < mono.size(); ++i) {
        AlgebraElement mid = module_action(
            HopfElement::monomial(m->hopf, mono[i].I), imgs[mono[i].gen]);
        int ap = m->generators[mono[i].gen].parity;
        if (!mid.is_zero()) {
          Rational sgn = ((shift * before) % 2) ? -1 : 1;
          AlgebraElement piece = mid * (c * sgn);
          if (m->kind == ModuleKind::symmetric_algebra) {
            AlgebraElement pre = AlgebraElement::unit(m);
            for (size_t jj = 0; jj < i; ++jj)
              pre = super_multiply(
                  pre, AlgebraElement::atom(m, mono[jj].I, mono[jj].gen));
            AlgebraElement post = AlgebraElement::unit(m);
            for (size_t jj = i + 1; jj < mono.size(); ++jj)
              post = super_multiply(
                  post, AlgebraElement::atom(m, mono[jj].I, mono[jj].gen));
            piece = super_multiply(super_multiply(pre, mid), post) * (c * sgn);
          }
          out = out + piece;
        }
        before = (before + ap) % 2;
      }
    }
    return PseudoTensor::from_element(out);
  };
  return OperadElement(mod, 1, shift, fn);
}

OperadElement parse_cochain(const ModulePtr& mod,
                            const std::string& json_text) {
  json j = json::parse(json_text);
  int degree = j.at("degree").get<int>();
  if (degree == -1)
    return OperadElement::from_class(
        parse_element(mod, j.at("value").get<std::string>()));
  if (degree == 0) {
    std::vector<AlgebraElement> images(mod->generators.size(),
                                       AlgebraElement::zero(mod));
    for (const auto& e : j.at("values")) {
      auto args = e.at("args");
      if (args.size() != 1) throw error("degree-0 cochains take one argument");
      int g = mod->generator_index(args[0].get<std::string>());
      images[g] = parse_element(mod, e.at("value").get<std::string>());
    }
    return derivation_cochain(mod, images);
  }
  if (degree == 1) {
    std::map<std::pair<int, int>, PseudoTensor> table;
    for (const auto& e : j.at("values")) {
      int a = mod->generator_index(e.at("a").get<std::string>());
      int b = mod->generator_index(e.at("b").get<std::string>());
      table[{a, b}] = parse_tensor(mod, 2, e.at("value").get<std::string>());
    }
    return lie_master(make_pseudoalgebra(mod, table));
  }
  throw error("cochain files support degrees -1, 0 and 1");
}

OperadElement load_cochain(const ModulePtr& mod, const std::string& path) {
  return parse_cochain(mod, read_file(path));
}

}  // namespace pcl
