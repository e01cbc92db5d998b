#ifndef SELFSIM_TOOLS_APP_HPP
#define SELFSIM_TOOLS_APP_HPP

// Command-line front end. run_cli() takes the arguments after the program
// name and writes to the given streams so that tests can drive it in-process.
//
// Exit status: 0 success, 1 usage error, 2 computation error, 3 failed
// verification.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <selfsim/selfsim.hpp>

namespace selfsim::cli {

inline constexpr const char *tool_version = "1.0.0";
inline constexpr const char *cache_env_var = "SELFSIM_CACHE_DIR";

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, usage = 1, computation = 2, verification = 3 };

struct RunConfig {
  std::string group;
  std::string file;
  int level = 0;
  std::string ray = "dinf";
  std::size_t max_points = SizeCap{}.max_points;
  std::uint64_t seed = default_seed;
  bool json = false;
  bool dot = false;
  std::string cache_dir;
  unsigned workers = 1;

  // per-command
  std::string word;
  std::string vertex;
  int depth = 1;
  bool oracle = false;
  std::size_t cases = 200;
};

struct LoadedGroup {
  std::string label; // builtin key or file path
  WreathPresentation presentation;
  std::optional<CatalogEntry> entry;
};

inline LoadedGroup load_group(const RunConfig &cfg) {
  if (cfg.group.empty() == cfg.file.empty())
    throw UsageError("exactly one of --group and --file is required");
  if (!cfg.group.empty()) {
    auto entry = builtin(cfg.group);
    return {cfg.group, entry.presentation, entry};
  }
  std::ifstream in(cfg.file);
  if (!in)
    throw UsageError("cannot open presentation file '" + cfg.file + "'");
  return {cfg.file, parse_presentation(in), std::nullopt};
}

inline Json envelope(const RunConfig &cfg, const std::string &group, std::optional<int> level) {
  Json doc;
  doc["tool_version"] = tool_version;
  doc["seed"] = cfg.seed;
  doc["group"] = group;
  doc["level"] = level ? Json(*level) : Json(nullptr);
  return doc;
}

inline Json scheme_to_json(const OrbitalScheme &s) {
  Json p = Json::array();
  for (std::size_t i = 0; i < s.rank; ++i) {
    Json pi = Json::array();
    for (std::size_t j = 0; j < s.rank; ++j) {
      Json pij = Json::array();
      for (std::size_t k = 0; k < s.rank; ++k)
        pij.push_back(s.p(i, j, k));
      pi.push_back(std::move(pij));
    }
    p.push_back(std::move(pi));
  }
  Json doc;
  doc["points"] = s.points;
  doc["rank"] = s.rank;
  doc["valencies"] = s.valencies;
  doc["pairing"] = s.pairing;
  doc["commutative"] = is_commutative(s);
  doc["p"] = std::move(p);
  return doc;
}

inline OrbitalScheme scheme_from_json(const Json &doc) {
  OrbitalScheme s;
  s.points = doc.at("points").get<std::size_t>();
  s.rank = doc.at("rank").get<std::size_t>();
  s.valencies = doc.at("valencies").get<std::vector<long long>>();
  s.pairing = doc.at("pairing").get<std::vector<std::size_t>>();
  s.intersection.assign(s.rank * s.rank * s.rank, 0);
  const auto &p = doc.at("p");
  for (std::size_t i = 0; i < s.rank; ++i)
    for (std::size_t j = 0; j < s.rank; ++j)
      for (std::size_t k = 0; k < s.rank; ++k)
        s.p(i, j, k) = p.at(i).at(j).at(k).get<long long>();
  return s;
}

/// Scheme and degree results stored per (presentation fingerprint, level,
/// ray). Entries are trusted only after the scheme axioms hold again.
class ResultCache {
public:
  explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

  bool enabled() const noexcept { return !dir_.empty(); }

  std::filesystem::path path(const WreathPresentation &pres, int n, const Ray &ray) const {
    std::string ray_key;
    for (char c : ray.to_string())
      ray_key.push_back(std::isdigit(static_cast<unsigned char>(c)) ? c : '_');
    return std::filesystem::path(dir_) / (pres.fingerprint() + "-n" + std::to_string(n) + "-r" + ray_key + ".json");
  }

  std::optional<Json> load(const WreathPresentation &pres, int n, const Ray &ray) const {
    if (!enabled())
      return std::nullopt;
    std::ifstream in(path(pres, n, ray));
    if (!in)
      return std::nullopt;
    try {
      Json doc = Json::parse(in);
      if (!verify_scheme_axioms(scheme_from_json(doc.at("scheme"))).empty())
        return std::nullopt;
      return doc;
    } catch (const std::exception &) {
      return std::nullopt;
    }
  }

  void store(const WreathPresentation &pres, int n, const Ray &ray, const Json &doc) const {
    if (!enabled())
      return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    std::ofstream out(path(pres, n, ray));
    if (out)
      out << doc.dump() << "\n";
  }

private:
  std::string dir_;
};

class Runner {
public:
  Runner(RunConfig cfg, std::ostream &out) : cfg_(std::move(cfg)), out_(out), cache_(cache_dir(cfg_)) {}

  int catalog() {
    Json list = Json::array();
    for (auto key : builtin_keys()) {
      const auto e = builtin(key);
      Json item;
      item["key"] = std::string(key);
      item["degree"] = e.degree();
      item["generators"] = e.presentation.generator_count();
      list.push_back(std::move(item));
    }
    if (cfg_.json) {
      Json doc = envelope(cfg_, "", std::nullopt);
      doc["groups"] = std::move(list);
      emit(doc);
    } else {
      for (const auto &item : list)
        out_ << item["key"].get<std::string>() << "  degree " << item["degree"].get<int>() << "  generators "
             << item["generators"].get<std::size_t>() << "\n";
    }
    return ok;
  }

  int act_cmd() {
    const auto g = load_group(cfg_);
    const Word w = g.presentation.parse_word(cfg_.word);
    const Vertex v = Vertex::parse(g.presentation.degree(), cfg_.vertex);
    const Vertex image = act(g.presentation, w, v);
    if (cfg_.json) {
      Json doc = envelope(cfg_, g.label, v.level());
      doc["word"] = g.presentation.render(w);
      doc["vertex"] = v.to_string();
      doc["image"] = image.to_string();
      emit(doc);
    } else {
      out_ << image.to_string() << "\n";
    }
    return ok;
  }

  int section_cmd() {
    const auto g = load_group(cfg_);
    const Word w = g.presentation.parse_word(cfg_.word);
    const Vertex v = Vertex::parse(g.presentation.degree(), cfg_.vertex);
    const Word sec = section(g.presentation, w, v);
    if (cfg_.json) {
      Json doc = envelope(cfg_, g.label, v.level());
      doc["word"] = g.presentation.render(w);
      doc["vertex"] = v.to_string();
      doc["section"] = g.presentation.render(sec);
      emit(doc);
    } else {
      out_ << g.presentation.render(sec) << "\n";
    }
    return ok;
  }

  int order_cmd() {
    const auto g = load_group(cfg_);
    const Word w = g.presentation.parse_word(cfg_.word);
    const BigInt order = order_at_level(g.presentation, w, cfg_.level, cap());
    if (cfg_.json) {
      Json doc = envelope(cfg_, g.label, cfg_.level);
      doc["word"] = g.presentation.render(w);
      doc["order"] = order.str();
      emit(doc);
    } else {
      out_ << order.str() << "\n";
    }
    return ok;
  }

  int portrait_cmd() {
    const auto g = load_group(cfg_);
    const Word w = g.presentation.parse_word(cfg_.word);
    const PortraitNode root = portrait(g.presentation, w, cfg_.depth);
    if (cfg_.dot) {
      out_ << portrait_to_dot(g.presentation, root);
    } else if (cfg_.json) {
      Json doc = envelope(cfg_, g.label, cfg_.depth);
      doc["word"] = g.presentation.render(w);
      doc["portrait"] = portrait_json(g.presentation, root);
      emit(doc);
    } else {
      print_portrait(g.presentation, root);
    }
    return ok;
  }

  int orbits_cmd() {
    const auto g = load_group(cfg_);
    const Ray ray = Ray::parse(g.presentation.degree(), cfg_.ray);
    const auto part = stabilizer_suborbits(g.presentation, cfg_.level, ray, cap());
    const auto blocks = part.block_strings();
    if (cfg_.json) {
      Json doc = envelope(cfg_, g.label, cfg_.level);
      doc["base"] = part.base.to_string();
      doc["blocks"] = blocks;
      emit(doc);
    } else {
      out_ << "level " << cfg_.level << ", base " << part.base.to_string() << ", " << blocks.size() << " blocks\n";
      for (const auto &b : blocks) {
        out_ << "{";
        for (std::size_t k = 0; k < b.size(); ++k)
          out_ << (k ? ", " : "") << b[k];
        out_ << "}\n";
      }
    }
    return ok;
  }

  int scheme_cmd() {
    const auto g = load_group(cfg_);
    const Ray ray = Ray::parse(g.presentation.degree(), cfg_.ray);
    if (cfg_.dot) {
      out_ << orbital_graph_to_dot(PairLabeler(g.presentation, cfg_.level, ray, scheme_options()));
      return ok;
    }
    const OrbitalScheme s = cached_scheme(g.presentation, ray);
    if (cfg_.json) {
      Json doc = envelope(cfg_, g.label, cfg_.level);
      const Json body = scheme_to_json(s);
      for (const auto &[k, v] : body.items())
        doc[k] = v;
      emit(doc);
    } else {
      out_ << "rank " << s.rank << ", commutative " << (is_commutative(s) ? "yes" : "no") << "\nvalencies:";
      for (auto k : s.valencies)
        out_ << " " << k;
      out_ << "\npairing:";
      for (auto t : s.pairing)
        out_ << " " << t;
      out_ << "\n";
    }
    return ok;
  }

  int decompose_cmd() {
    const auto g = load_group(cfg_);
    const Ray ray = Ray::parse(g.presentation.degree(), cfg_.ray);
    const OrbitalScheme s = cached_scheme(g.presentation, ray);
    const bool gelfand = is_commutative(s);
    if (!gelfand)
      throw NumericalError("the Hecke algebra is not commutative; no multiplicity-free decomposition");
    const auto degrees = cached_degrees(g.presentation, cfg_.level, ray, s);

    Json nested = nullptr;
    try {
      level_size(g.presentation.degree(), cfg_.level + 1, cap());
      const auto next = cached_degrees(g.presentation, cfg_.level + 1, ray,
                                       cached_scheme(g.presentation, ray, cfg_.level + 1));
      nested = is_submultiset(degrees, next);
    } catch (const ResourceError &) {
    }

    std::optional<std::vector<long long>> oracle;
    if (cfg_.oracle)
      oracle = dense_commutant_oracle(g.presentation, cfg_.level, ray, cfg_.seed);

    if (cfg_.json) {
      Json doc = envelope(cfg_, g.label, cfg_.level);
      doc["rank"] = s.rank;
      doc["degrees"] = degrees;
      doc["gelfand"] = gelfand;
      doc["nested_in_next"] = nested;
      if (oracle) {
        doc["oracle_degrees"] = *oracle;
        doc["oracle_agrees"] = *oracle == degrees;
      }
      emit(doc);
    } else {
      out_ << "level " << cfg_.level << ", rank " << s.rank << ", gelfand " << (gelfand ? "yes" : "no") << "\n";
      out_ << "degrees " << join(degrees) << "\n";
      if (!nested.is_null())
        out_ << "nested in level " << cfg_.level + 1 << ": " << (nested.get<bool>() ? "yes" : "no") << "\n";
      if (oracle)
        out_ << "dense oracle " << join(*oracle) << (*oracle == degrees ? " (agrees)" : " (DISAGREES)") << "\n";
    }
    if (oracle && *oracle != degrees)
      return verification;
    return ok;
  }

  int verify_cmd() {
    const auto g = load_group(cfg_);
    const Ray ray = Ray::parse(g.presentation.degree(), cfg_.ray);
    VerifyOptions opts;
    opts.seed = cfg_.seed;
    opts.cases = cfg_.cases;
    const auto report = verify_all(g.presentation, cfg_.level, ray, opts, g.entry ? &*g.entry : nullptr);
    if (cfg_.json) {
      Json doc = envelope(cfg_, g.label, cfg_.level);
      Json results = Json::array();
      for (const auto &r : report.results) {
        Json item;
        item["property"] = r.name;
        item["cases"] = r.cases;
        item["failures"] = r.failures;
        item["passed"] = r.passed();
        if (!r.passed())
          item["first_failure"] = r.first_failure;
        results.push_back(std::move(item));
      }
      doc["results"] = std::move(results);
      doc["passed"] = report.passed();
      emit(doc);
    } else {
      for (const auto &r : report.results) {
        out_ << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
        if (r.failures)
          out_ << ", " << r.failures << " failures; first: " << r.first_failure;
        out_ << ")\n";
      }
    }
    return report.passed() ? ok : verification;
  }

private:
  static std::string cache_dir(const RunConfig &cfg) {
    if (!cfg.cache_dir.empty())
      return cfg.cache_dir;
    if (const char *env = std::getenv(cache_env_var))
      return env;
    return {};
  }

  SizeCap cap() const { return SizeCap{cfg_.max_points}; }

  SchemeOptions scheme_options() const {
    SchemeOptions opts;
    opts.cap = cap();
    opts.workers = cfg_.workers;
    return opts;
  }

  OrbitalScheme cached_scheme(const WreathPresentation &pres, const Ray &ray, std::optional<int> level = {}) {
    const int n = level.value_or(cfg_.level);
    if (auto doc = cache_.load(pres, n, ray))
      return scheme_from_json(doc->at("scheme"));
    OrbitalScheme s = build_scheme(pres, n, ray, scheme_options());
    Json doc;
    doc["scheme"] = scheme_to_json(s);
    cache_.store(pres, n, ray, doc);
    return s;
  }

  std::vector<long long> cached_degrees(const WreathPresentation &pres, int n, const Ray &ray,
                                        const OrbitalScheme &s) {
    auto doc = cache_.load(pres, n, ray);
    if (doc && doc->contains("degrees") && doc->value("seed", std::uint64_t{0}) == cfg_.seed) {
      auto degrees = doc->at("degrees").get<std::vector<long long>>();
      long long total = 0;
      for (auto m : degrees)
        total += m;
      if (degrees.size() == s.rank && total == static_cast<long long>(s.points))
        return degrees;
    }
    auto degrees = sorted_degrees(spectral_decomposition(s, cfg_.seed).multiplicities);
    if (cache_.enabled()) {
      Json fresh;
      fresh["scheme"] = scheme_to_json(s);
      fresh["seed"] = cfg_.seed;
      fresh["degrees"] = degrees;
      cache_.store(pres, n, ray, fresh);
    }
    return degrees;
  }

  Json portrait_json(const WreathPresentation &pres, const PortraitNode &node) const {
    Json j;
    j["vertex"] = node.vertex.to_string();
    j["root_perm"] = cycle_notation(node.root_perm);
    if (node.is_leaf) {
      j["section"] = pres.render(node.section);
    } else {
      Json children = Json::array();
      for (const auto &c : node.children)
        children.push_back(portrait_json(pres, c));
      j["children"] = std::move(children);
    }
    return j;
  }

  void print_portrait(const WreathPresentation &pres, const PortraitNode &node) {
    out_ << std::string(static_cast<std::size_t>(2 * node.vertex.level()), ' ') << node.vertex.to_string() << "  "
         << cycle_notation(node.root_perm);
    if (node.is_leaf)
      out_ << "  " << pres.render(node.section);
    out_ << "\n";
    for (const auto &c : node.children)
      print_portrait(pres, c);
  }

  static std::string join(const std::vector<long long> &values) {
    std::string s;
    for (std::size_t k = 0; k < values.size(); ++k)
      s += (k ? "," : "") + std::to_string(values[k]);
    return s;
  }

  void emit(const Json &doc) { out_ << doc.dump() << "\n"; }

  RunConfig cfg_;
  std::ostream &out_;
  ResultCache cache_;
};

inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Suborbits, Hecke algebras and Gelfand-pair decompositions for self-similar groups", "selfsim"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App *sub, bool with_level, bool with_ray) {
    auto *grp = sub->add_option("--group", cfg.group, "builtin group key (see `catalog list`)");
    auto *file = sub->add_option("--file", cfg.file, "presentation file");
    grp->excludes(file);
    sub->add_option("--seed", cfg.seed, "seed for randomized steps");
    sub->add_flag("--json", cfg.json, "emit JSON");
    sub->add_option("--cap", cfg.max_points, "maximum points per level");
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--cache-dir", cfg.cache_dir, std::string("result cache directory (default: $") + cache_env_var + ")");
    if (with_level)
      sub->add_option("--level", cfg.level, "tree level n")->required()->check(CLI::NonNegativeNumber);
    if (with_ray)
      sub->add_option("--ray", cfg.ray, "base ray: dinf, a digit string (periodic) or head(tail)");
  };

  auto *catalog = app.add_subcommand("catalog", "builtin groups");
  catalog->add_flag("--json", cfg.json, "emit JSON");
  catalog->add_subcommand("list", "list builtin groups")->add_flag("--json", cfg.json, "emit JSON");

  auto *act_sub = app.add_subcommand("act", "image of a vertex under a word");
  add_common(act_sub, false, false);
  act_sub->add_option("--word", cfg.word, "word, e.g. \"a b^-1\"")->required();
  act_sub->add_option("--vertex", cfg.vertex, "vertex as a digit string, '-' for the root")->required();

  auto *section_sub = app.add_subcommand("section", "section of a word at a vertex");
  add_common(section_sub, false, false);
  section_sub->add_option("--word", cfg.word)->required();
  section_sub->add_option("--vertex", cfg.vertex)->required();

  auto *order_sub = app.add_subcommand("order", "order of a word acting on a level");
  add_common(order_sub, true, false);
  order_sub->add_option("--word", cfg.word)->required();

  auto *portrait_sub = app.add_subcommand("portrait", "root permutations of sections down to a depth");
  add_common(portrait_sub, false, false);
  portrait_sub->add_option("--word", cfg.word)->required();
  portrait_sub->add_option("--depth", cfg.depth)->check(CLI::NonNegativeNumber);
  portrait_sub->add_flag("--dot", cfg.dot, "emit Graphviz DOT");

  auto *orbits_sub = app.add_subcommand("orbits", "suborbits of the level stabilizer of the ray");
  add_common(orbits_sub, true, true);

  auto *scheme_sub = app.add_subcommand("scheme", "orbital association scheme");
  add_common(scheme_sub, true, true);
  scheme_sub->add_flag("--dot", cfg.dot, "emit the orbital graph as Graphviz DOT");

  auto *decompose_sub = app.add_subcommand("decompose", "degrees of the irreducible constituents");
  add_common(decompose_sub, true, true);
  decompose_sub->add_flag("--oracle", cfg.oracle, "cross-check with the dense N x N computation");

  auto *verify_sub = app.add_subcommand("verify", "run the randomized invariant suites");
  add_common(verify_sub, true, true);
  verify_sub->add_option("--cases", cfg.cases, "cases per suite")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError &e) {
    if (cfg.json)
      err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    else
      err << "usage error: " << e.what() << "\n";
    return usage;
  }

  auto fail = [&](int code, const char *kind, const std::string &message) {
    if (cfg.json)
      err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
    else
      err << kind << " error: " << message << "\n";
    return code;
  };

  try {
    Runner runner(cfg, out);
    if (catalog->parsed())
      return runner.catalog();
    if (act_sub->parsed())
      return runner.act_cmd();
    if (section_sub->parsed())
      return runner.section_cmd();
    if (order_sub->parsed())
      return runner.order_cmd();
    if (portrait_sub->parsed())
      return runner.portrait_cmd();
    if (orbits_sub->parsed())
      return runner.orbits_cmd();
    if (scheme_sub->parsed())
      return runner.scheme_cmd();
    if (decompose_sub->parsed())
      return runner.decompose_cmd();
    if (verify_sub->parsed())
      return runner.verify_cmd();
  } catch (const UsageError &e) {
    return fail(usage, e.kind(), e.what());
  } catch (const ParseError &e) {
    return fail(usage, e.kind(), e.what());
  } catch (const Error &e) {
    return fail(computation, e.kind(), e.what());
  }
  return usage;
}

} // namespace selfsim::cli

#endif // SELFSIM_TOOLS_APP_HPP
