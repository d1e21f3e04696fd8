#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nildist/distortion.hpp"
#include "nildist/error.hpp"
#include "nildist/group_element.hpp"
#include "nildist/hall.hpp"
#include "nildist/subgroup.hpp"
#include "nildist/tietze.hpp"
#include "nildist/word.hpp"

namespace nildist::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::size_t m = 2;
  std::size_t c = 2;
  std::size_t radius = 8;
  std::size_t max_elements = kDefaultMaxElements;
  std::size_t hirsch_cap = Presentation::kDefaultHirschCap;
  std::size_t tietze_trials = 0;
  std::string format;  // empty: subcommand default
  std::uint64_t seed = 1;
  std::vector<std::string> words;
};

Json big_json(const BigInt& v) {
  if (auto x = to_int64(v)) return *x;
  return v.get_str();
}

Json coords_json(const Coords& v) {
  Json arr = Json::array();
  for (const auto& x : v) arr.push_back(big_json(x));
  return arr;
}

std::string names_list(const std::vector<std::size_t>& idx, const Presentation& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += p.name(idx[i]);
  }
  return out + "}";
}

Json names_json(const std::vector<std::size_t>& idx, const Presentation& p) {
  Json arr = Json::array();
  for (std::size_t i : idx) arr.push_back(p.name(i));
  return arr;
}

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out)
      : cfg_(cfg),
        out_(out),
        pres_(Presentation::make(cfg.m, cfg.c, cfg.hirsch_cap)),
        hall_(HallBasis::generate(pres_)) {}

  std::string format_or(const char* fallback) const {
    return cfg_.format.empty() ? fallback : cfg_.format;
  }

  WordExpr parse_arg(const std::string& s) const { return parse(s, *pres_); }

  GroupElement element(const std::string& s) const {
    return evaluate(parse_arg(s), pres_);
  }

  std::vector<Word> words() const {
    std::vector<Word> out;
    for (const auto& s : cfg_.words) out.push_back(flatten(parse_arg(s)));
    return out;
  }

  void require_words(std::size_t min, std::size_t max) const {
    if (cfg_.words.size() < min || cfg_.words.size() > max) {
      throw DomainError("wrong number of word arguments");
    }
  }

  void print_element(const GroupElement& g) {
    Coords v = hall_->to_coordinates(g);
    auto w = weight(g);
    if (format_or("text") == "json") {
      Json j;
      j["normal_form"] = hall_->normal_form(v);
      j["coords"] = coords_json(v);
      j["weight"] = w ? Json(*w) : Json(nullptr);
      out_ << j.dump(2) << '\n';
    } else {
      out_ << hall_->normal_form(v) << '\n' << "coords " << format_coords(v) << '\n';
    }
  }

  int nf() {
    require_words(1, 1);
    print_element(element(cfg_.words[0]));
    return kOk;
  }

  int mul() {
    require_words(1, SIZE_MAX);
    GroupElement acc(pres_);
    for (const auto& s : cfg_.words) acc = multiply(acc, element(s));
    print_element(acc);
    return kOk;
  }

  int comm() {
    require_words(2, SIZE_MAX);
    // Right-normed: [u, v, w] = [u, [v, w]].
    GroupElement acc = element(cfg_.words.back());
    for (std::size_t i = cfg_.words.size() - 1; i-- > 0;) {
      acc = commutator(element(cfg_.words[i]), acc);
    }
    print_element(acc);
    return kOk;
  }

  int weight_cmd() {
    require_words(1, 1);
    auto w = weight(element(cfg_.words[0]));
    if (format_or("text") == "json") {
      Json j;
      j["weight"] = w ? Json(*w) : Json(nullptr);
      out_ << j.dump(2) << '\n';
    } else {
      out_ << (w ? std::to_string(*w) : std::string("inf")) << '\n';
    }
    return kOk;
  }

  int coords() {
    require_words(1, 1);
    Coords v = hall_->to_coordinates(element(cfg_.words[0]));
    if (format_or("text") == "json") {
      out_ << coords_json(v).dump() << '\n';
    } else {
      out_ << format_coords(v) << '\n';
    }
    return kOk;
  }

  int hall() {
    if (format_or("text") == "json") {
      Json arr = Json::array();
      for (std::size_t i = 0; i < hall_->size(); ++i) {
        arr.push_back({{"index", i + 1},
                       {"weight", (*hall_)[i].weight},
                       {"label", hall_->label(i)}});
      }
      out_ << arr.dump(2) << '\n';
    } else {
      for (std::size_t i = 0; i < hall_->size(); ++i) {
        out_ << std::setw(3) << i + 1 << "  w=" << (*hall_)[i].weight << "  "
             << hall_->label(i) << '\n';
      }
    }
    return kOk;
  }

  int exponent() {
    require_words(1, 1);
    std::size_t d = cyclic_distortion_exponent(words().front(), pres_);
    if (format_or("text") == "json") {
      out_ << Json{{"cyclic_exponent", d}}.dump(2) << '\n';
    } else {
      out_ << d << '\n';
    }
    return kOk;
  }

  int analyze() {
    require_words(1, SIZE_MAX);
    std::vector<Word> gens = words();
    DistortionReport r = decide_undistorted(gens, hall_);

    Json j;
    j["verdict"] = to_string(r.verdict);
    j["k"] = r.k;
    j["hirsch"] = {{"H", r.hirsch_H}, {"rH", r.hirsch_rH}, {"F", r.hirsch_F}};
    j["finite_index"] = r.finite_index;
    j["normal"] = r.normal;
    j["cyclic_exponent"] = r.cyclic_exponent ? Json(*r.cyclic_exponent) : Json(nullptr);
    if (r.kernel_witness) {
      j["kernel_witness"] = {{"word", r.kernel_witness->word},
                             {"weight", r.kernel_witness->weight}};
    } else {
      j["kernel_witness"] = nullptr;
    }
    if (r.retract_witness) {
      const auto& rw = *r.retract_witness;
      Json hn;
      hn["generators"] = rw.hn_generators;
      hn["basis"] = rw.hn_basis;
      hn["hirsch"] = rw.hirsch_hn;
      j["retract"] = {{"kept", names_json(rw.retraction.kept, *pres_)},
                      {"killed", names_json(rw.retraction.killed, *pres_)},
                      {"hn", hn}};
    } else {
      j["retract"] = nullptr;
    }

    if (cfg_.tietze_trials > 0) {
      std::mt19937_64 rng(cfg_.seed);
      std::size_t flips = 0;
      for (std::size_t t = 0; t < cfg_.tietze_trials; ++t) {
        auto moved = retype_generators(gens, 6, rng);
        if (decide_undistorted(moved, hall_).verdict != r.verdict) ++flips;
      }
      j["tietze"] = {{"seed", cfg_.seed},
                     {"trials", cfg_.tietze_trials},
                     {"verdict_flips", flips}};
    }

    if (format_or("json") == "json") {
      out_ << j.dump(2) << '\n';
    } else {
      out_ << "verdict: " << to_string(r.verdict) << '\n'
           << "k: " << r.k << '\n'
           << "hirsch H/rH/F: " << r.hirsch_H << '/' << r.hirsch_rH << '/'
           << r.hirsch_F << '\n'
           << "finite_index: " << std::boolalpha << r.finite_index << '\n'
           << "normal: " << r.normal << '\n';
      if (r.cyclic_exponent) out_ << "cyclic_exponent: " << *r.cyclic_exponent << '\n';
      if (r.kernel_witness) {
        out_ << "kernel_witness: " << r.kernel_witness->word << " (weight "
             << r.kernel_witness->weight << ")\n";
      }
      if (r.retract_witness) {
        const auto& rw = *r.retract_witness;
        out_ << "retract: kept " << names_list(rw.retraction.kept, *pres_)
             << " killed " << names_list(rw.retraction.killed, *pres_)
             << ", hirsch(HN) = " << rw.hirsch_hn << '\n';
      }
    }
    return kOk;
  }

  int measure() {
    require_words(1, SIZE_MAX);
    MeasureOptions options;
    options.max_elements = cfg_.max_elements;
    DistortionTable t = measure_distortion(words(), hall_, cfg_.radius, options);
    std::string fmt = format_or("csv");
    std::optional<double> slope;
    try {
      slope = estimate_exponent(t);
    } catch (const DomainError&) {
    }
    if (fmt == "csv") {
      out_ << to_csv(t);
    } else if (fmt == "json") {
      Json rows = Json::array();
      for (const auto& row : t.rows) {
        rows.push_back({{"n", row.n}, {"delta", big_json(row.delta)}, {"exact", row.exact}});
      }
      Json j;
      j["rows"] = rows;
      j["complete"] = t.complete;
      j["slope"] = slope ? Json(*slope) : Json(nullptr);
      out_ << j.dump(2) << '\n';
    } else {
      for (const auto& row : t.rows) {
        out_ << "n=" << row.n << "  delta=" << row.delta.get_str()
             << (row.exact ? "" : " (lower bound)") << '\n';
      }
      if (slope) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << *slope;
        out_ << "slope " << s.str() << '\n';
      }
    }
    if (!t.complete) {
      throw CapExceeded("ambient ball stopped at radius " +
                        std::to_string(t.rows.size()) + " by --max-elements");
    }
    return kOk;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  PresentationPtr pres_;
  HallBasisPtr hall_;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact computations in free nilpotent groups G(m,c)", "nildist"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-m", cfg.m, "generator count")->check(CLI::PositiveNumber);
  app.add_option("-c", cfg.c, "nilpotency class")->check(CLI::PositiveNumber);
  app.add_option("--radius", cfg.radius, "ball radius for measure");
  app.add_option("--max-elements", cfg.max_elements, "ball element cap");
  app.add_option("--hirsch-cap", cfg.hirsch_cap, "cap on the Hirsch length of G(m,c)");
  app.add_option("--format", cfg.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"nf", "normal form of a word"},
      {"mul", "normal form of a product"},
      {"comm", "right-normed commutator of words"},
      {"weight", "lower central weight of a word"},
      {"coords", "Mal'cev coordinates of a word"},
      {"hall", "list the Hall basis"},
      {"analyze", "undistortedness verdict for a subgroup"},
      {"exponent", "distortion exponent of a cyclic subgroup"},
      {"measure", "empirical distortion table"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    if (std::string(s.name) != "hall") sub->add_option("words", cfg.words, "group words");
    if (std::string(s.name) == "analyze") {
      sub->add_option("--tietze-trials", cfg.tietze_trials,
                      "re-run on this many randomly re-chosen generating sets");
    }
  }

  // CLI11 reads an argument of the form "[...]" as a list literal. Words are
  // whitespace-insensitive, so a leading space keeps commutators intact.
  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) {
    std::string a = argv[i];
    if (a.size() >= 2 && a.front() == '[' && a.back() == ']') a.insert(0, " ");
    args.push_back(std::move(a));
  }

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "nildist: " << e.what() << '\n';
    return kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Session session(cfg, out);
    if (name == "nf") return session.nf();
    if (name == "mul") return session.mul();
    if (name == "comm") return session.comm();
    if (name == "weight") return session.weight_cmd();
    if (name == "coords") return session.coords();
    if (name == "hall") return session.hall();
    if (name == "analyze") return session.analyze();
    if (name == "exponent") return session.exponent();
    if (name == "measure") return session.measure();
  } catch (const ParseError& e) {
    err << "nildist: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "nildist: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "nildist: cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InternalInconsistency& e) {
    err << "nildist: internal inconsistency: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace nildist::cli
