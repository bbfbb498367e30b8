// polygauge: evaluate, tabulate and verify the chord-length and point-distance
// laws of regular polygons.

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polygauge/chord_law.hpp"
#include "polygauge/distance_law.hpp"
#include "polygauge/error.hpp"
#include "polygauge/montecarlo.hpp"
#include "polygauge/reference.hpp"
#include "polygauge/verify.hpp"

namespace {

using namespace polygauge;

constexpr int kExitInvalid = 2;

std::string fmt(double v, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

struct OutputRecord {
  double x;
  double value;
  std::string series;
};

class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "stdout" || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw InvalidParameter("cannot open output file " + path);
  }
  std::ostream& out() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_csv(std::ostream& os, const std::vector<OutputRecord>& rows) {
  os << "x,value,series\n";
  for (const auto& r : rows) os << fmt(r.x, 17) << ',' << fmt(r.value, 17) << ',' << r.series << '\n';
}

void write_json(std::ostream& os, const std::vector<OutputRecord>& rows) {
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "  {\"x\": " << fmt(r.x, 17) << ", \"value\": " << fmt(r.value, 17)
       << ", \"series\": \"" << r.series << "\"}" << (i + 1 < rows.size() ? ",\n" : "\n");
  }
  os << "]\n";
}

struct EvalArgs {
  int n = 0;
  double r = 1.0;
  std::string quantity;
  std::optional<double> at;
  std::string out;
};

int cmd_eval(const EvalArgs& a) {
  const RegularPolygon poly(a.n, a.r);
  double value = 0.0;
  if (a.quantity == "meanchord") {
    value = mean_chord(poly);
  } else if (a.quantity == "meandist") {
    value = mean_distance(DistanceLaw(poly));
  } else {
    if (!a.at) throw InvalidParameter("--at is required for quantity " + a.quantity);
    if (a.quantity == "F") {
      value = cdf_chord(ChordLaw(poly), *a.at);
    } else if (a.quantity == "g") {
      value = pdf_distance(DistanceLaw(poly), *a.at);
    } else {
      value = cdf_distance(DistanceLaw(poly), *a.at);
    }
  }
  Sink sink(a.out);
  sink.out() << fmt(value, 12) << '\n';
  return 0;
}

struct TableArgs {
  int n = 0;
  double r = 1.0;
  std::string quantity;
  int points = 101;
  std::string format = "csv";
  bool circle = false;
  std::string out;
};

int cmd_table(const TableArgs& a) {
  if (a.points < 2) throw InvalidParameter("--points must be at least 2");
  const RegularPolygon poly(a.n, a.r);
  const DistanceLaw law(poly);
  const double span = a.circle ? std::max(poly.max_chord(), 2.0 * a.r) : poly.max_chord();

  std::vector<double> xs;
  for (int j = 0; j < a.points; ++j) {
    xs.push_back(j + 1 == a.points ? span : span * j / (a.points - 1));
  }

  std::vector<OutputRecord> rows;
  for (double x : xs) {
    double v = 0.0;
    if (a.quantity == "F") v = law.chord_law().cdf(x);
    else if (a.quantity == "g") v = law.pdf(x);
    else v = law.cdf(x);
    rows.push_back({x, v, "polygon"});
  }
  if (a.circle) {
    for (double x : xs) {
      double v = 0.0;
      if (a.quantity == "F") v = reference::circle_chord_cdf(a.r, x);
      else if (a.quantity == "g") v = reference::circle_distance_pdf(a.r, x);
      else v = reference::circle_distance_cdf(a.r, x);
      rows.push_back({x, v, "circle"});
    }
  }
  Sink sink(a.out);
  if (a.format == "json") write_json(sink.out(), rows);
  else write_csv(sink.out(), rows);
  return 0;
}

struct VerifyArgs {
  std::string n_range = "3..12";
  double r = 1.0;
  std::size_t samples = 1'000'000;
  std::uint64_t seed = 42;
  int mutate_theta = 0;
  std::string out;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidParameter("--n expects N or LO..HI, got '" + text + "'");
  }
}

int cmd_verify(const VerifyArgs& a) {
  verify::Options opt;
  std::tie(opt.n_min, opt.n_max) = parse_range(a.n_range);
  if (opt.n_min < 3 || opt.n_max < opt.n_min) throw InvalidParameter("--n range must satisfy 3 <= LO <= HI");
  // Validates r before any work starts.
  (void)RegularPolygon(opt.n_min, a.r);
  opt.r = a.r;
  opt.samples = a.samples;
  opt.seed = a.seed;
  opt.threads = mc::threads_from_env();
  if (a.mutate_theta != 0) opt.signs = ThetaSigns::flipped(a.mutate_theta);

  const auto results = verify::run_suite(opt);
  Sink sink(a.out);
  std::ostream& os = sink.out();
  int failed = 0;
  int skipped = 0;
  for (const auto& c : results) {
    const char* tag = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
    os << tag << "  n=" << c.n << "  " << c.name;
    if (c.skipped) {
      os << "  (samples below " << verify::kMinMonteCarloSamples << ")\n";
      ++skipped;
      continue;
    }
    os << "  metric=" << fmt(c.metric, 6) << "  threshold=" << fmt(c.threshold, 6) << '\n';
    if (!c.passed) ++failed;
  }
  os << (failed == 0 ? "OK" : "FAILED") << ": " << results.size() - failed - skipped << " passed, "
     << failed << " failed, " << skipped << " skipped\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chord-length and point-distance laws of regular polygons"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate one quantity");
  eval->add_option("--n", ev.n, "Number of sides")->required();
  eval->add_option("--r", ev.r, "Circumradius")->capture_default_str();
  eval->add_option("--quantity", ev.quantity, "F, g, G, meanchord or meandist")
      ->required()
      ->check(CLI::IsMember({"F", "g", "G", "meanchord", "meandist"}));
  eval->add_option("--at", ev.at, "Abscissa (chord length s or distance t)");
  eval->add_option("--out", ev.out, "Output path or 'stdout'");

  TableArgs tb;
  auto* table = app.add_subcommand("table", "Tabulate F, g or G over the support");
  table->add_option("--n", tb.n, "Number of sides")->required();
  table->add_option("--r", tb.r, "Circumradius")->capture_default_str();
  table->add_option("--quantity", tb.quantity, "F, g or G")
      ->required()
      ->check(CLI::IsMember({"F", "g", "G"}));
  table->add_option("--points", tb.points, "Number of abscissae")->capture_default_str();
  table->add_option("--format", tb.format, "csv or json")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
  table->add_flag("--circle", tb.circle, "Add the circle reference series");
  table->add_option("--out", tb.out, "Output path or 'stdout'");

  VerifyArgs vf;
  auto* ver = app.add_subcommand("verify", "Run the verification suite");
  ver->add_option("--n", vf.n_range, "N or LO..HI")->capture_default_str();
  ver->add_option("--r", vf.r, "Circumradius")->capture_default_str();
  ver->add_option("--samples", vf.samples, "Monte Carlo sample count")->capture_default_str();
  ver->add_option("--seed", vf.seed, "Random seed")->capture_default_str();
  ver->add_option("--out", vf.out, "Output path or 'stdout'");
  ver->add_option("--mutate-theta", vf.mutate_theta, "Flip the sign of one theta row (1..4)")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*eval) return cmd_eval(ev);
    if (*table) return cmd_table(tb);
    return cmd_verify(vf);
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
