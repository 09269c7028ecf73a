#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "quandle/quandle.hpp"
#include "quandle_spec.hpp"

namespace qtk {

using namespace quandle;

namespace {

std::string join_assignment(const GeneratorSet& gens, std::span<const Element> images) {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += ' ';
    out += gens.name(i) + "=" + std::to_string(images[i]);
  }
  return out;
}

NamedQuandle single_quandle(const std::string& spec) {
  auto all = resolve_spec(spec);
  if (all.size() != 1) throw MalformedInput("'" + spec + "' does not name exactly one quandle");
  return std::move(all.front());
}

std::vector<FiniteQuandle> quandles_of(const std::vector<NamedQuandle>& named) {
  std::vector<FiniteQuandle> out;
  out.reserve(named.size());
  for (const auto& n : named) out.push_back(n.quandle);
  return out;
}

// --- verify / make / inn -------------------------------------------------

int cmd_verify(const std::string& file, std::ostream& out) {
  const Table table = parse_table(read_file(file), "quandle");
  try {
    const FiniteQuandle q = FiniteQuandle::verify(table);
    out << "valid quandle of order " << q.order() << '\n';
    return kOk;
  } catch (const AxiomViolation& e) {
    out << "invalid: " << e.what() << '\n';
    return kDomain;
  }
}

int cmd_make(const std::string& spec, const std::string& out_file, std::ostream& out) {
  const NamedQuandle q = single_quandle(spec);
  const std::string text = format_quandle(q.quandle);
  if (out_file.empty() || out_file == "-") {
    out << text;
  } else {
    write_file(out_file, text);
  }
  return kOk;
}

int cmd_inn(const std::string& spec, std::ostream& out) {
  const NamedQuandle q = single_quandle(spec);
  const PermutationGroup inn = inner_group(q.quandle);
  std::set<Permutation> gens(inn.generators().begin(), inn.generators().end());
  out << "order: " << inn.order() << '\n';
  out << "generators: " << gens.size() << '\n';
  for (const auto& g : gens) out << "  " << g.cycle_string() << '\n';
  return kOk;
}

// --- freeq ---------------------------------------------------------------

/// Generator names mentioned in element texts, sorted.
GeneratorSet infer_generators(const std::vector<std::string>& texts) {
  std::set<std::string> names;
  for (const auto& t : texts) {
    std::string token;
    auto flush = [&] {
      if (token.ends_with("^-1")) token.resize(token.size() - 3);
      if (!token.empty() && token != "1") names.insert(token);
      token.clear();
    };
    for (std::size_t i = 0; i < t.size(); ++i) {
      const char c = t[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == '^' && t.compare(i, 3, "^-1") != 0) {
        flush();
      } else {
        token += c;
      }
    }
    flush();
  }
  return GeneratorSet(std::vector<std::string>(names.begin(), names.end()));
}

GeneratorSet freeq_generators(const std::string& gens_flag, const std::vector<std::string>& texts) {
  if (gens_flag.empty()) return infer_generators(texts);
  std::vector<std::string> names;
  std::stringstream ss(gens_flag);
  for (std::string name; std::getline(ss, name, ',');) {
    if (!name.empty()) names.push_back(name);
  }
  return GeneratorSet(std::move(names));
}

int cmd_freeq(const std::string& action, const std::vector<std::string>& elems,
              const std::string& gens_flag, std::ostream& out) {
  const std::size_t want = (action == "normalize" || action == "embed") ? 1 : 2;
  if (elems.size() != want) {
    throw MalformedInput("freeq " + action + " takes " + std::to_string(want) + " element(s)");
  }
  const GeneratorSet gens = freeq_generators(gens_flag, elems);
  std::vector<FreeQuandleElement> xs;
  for (const auto& e : elems) xs.push_back(normalize(parse_rack_element(e, gens)));

  if (action == "normalize") {
    out << format_element(xs[0], gens) << '\n';
  } else if (action == "embed") {
    out << format_word(embed(xs[0]), gens) << '\n';
  } else if (action == "op") {
    out << format_element(rack_op(xs[0], xs[1]), gens) << '\n';
  } else if (action == "opinv") {
    out << format_element(rack_op_inv(xs[0], xs[1]), gens) << '\n';
  } else if (action == "separate") {
    if (fq_equal(xs[0], xs[1])) {
      out << "equal: " << format_element(xs[0], gens) << '\n';
      return kDomain;
    }
    const SeparationWitness w = separate(xs[0], xs[1], gens.size());
    out << "degree: " << w.degree << '\n';
    for (std::size_t g = 0; g < gens.size(); ++g) {
      out << gens.name(g) << " -> " << w.generator_images[g].cycle_string() << '\n';
    }
    out << "first: " << format_element(xs[0], gens) << " -> " << w.first_image.cycle_string() << '\n';
    out << "second: " << format_element(xs[1], gens) << " -> " << w.second_image.cycle_string() << '\n';
  } else {
    throw MalformedInput("unknown freeq action '" + action + "'");
  }
  return kOk;
}

// --- present -------------------------------------------------------------

int cmd_present_homs(const std::string& pres_file, const std::string& spec, unsigned threads,
                     std::ostream& out) {
  const QuandlePresentation p = parse_presentation(read_file(pres_file));
  for (const auto& q : resolve_spec(spec)) {
    const auto homs = hom_enumerate(p, q.quandle, threads);
    out << "quandle: " << q.name << '\n';
    out << "homs: " << homs.size() << '\n';
    for (const auto& h : homs) out << join_assignment(p.generators(), h) << '\n';
  }
  return kOk;
}

int cmd_present_decide(const std::string& pres_file, const std::string& t1_text,
                       const std::string& t2_text, std::size_t budget, const std::string& library_flag,
                       std::ostream& out) {
  const QuandlePresentation p = parse_presentation(read_file(pres_file));
  const QuandleTerm t1 = parse_term(t1_text, p.generators());
  const QuandleTerm t2 = parse_term(t2_text, p.generators());
  const auto named = resolve_library(library_flag);
  const auto library = quandles_of(named);

  const DecideOutcome r = decide_equal(p, t1, t2, budget, library);
  out << "verdict: " << verdict_name(r.verdict) << '\n';
  if (r.trace) {
    out << "trace: " << r.trace->size() << " step(s)\n";
    QuandleTerm cur = t1;
    out << "  " << format_term(cur, p.generators()) << '\n';
    for (const auto& step : *r.trace) {
      cur = *apply_step(p, cur, step);
      out << "  => " << format_term(cur, p.generators()) << "   [" << describe_step(step, p) << "]\n";
    }
  }
  if (r.witness) {
    out << "witness: " << named[r.witness->library_index].name << '\n';
    out << "assignment: " << join_assignment(p.generators(), r.witness->assignment) << '\n';
    out << "values: " << r.witness->first_value << " != " << r.witness->second_value << '\n';
  }
  out << "expansions: " << r.expansions << '\n';
  out << "quandles_checked: " << r.quandles_checked << '\n';
  out << "homs_checked: " << r.homs_checked << '\n';
  return r.verdict == Verdict::Unknown ? kUnknown : kOk;
}

// --- knot ----------------------------------------------------------------

Diagram load_diagram(const std::string& braid, const std::string& crossings_file, const char* which) {
  if (!braid.empty() && !crossings_file.empty()) {
    throw MalformedInput(std::string("give either a braid or a crossing list for ") + which);
  }
  if (!braid.empty()) return parse_braid(braid);
  if (!crossings_file.empty()) return parse_crossing_list(read_file(crossings_file));
  throw MalformedInput(std::string("missing diagram for ") + which);
}

int cmd_knot_colorings(const Diagram& d, const std::string& spec, unsigned threads, std::ostream& out) {
  const QuandlePresentation p = diagram_presentation(d);
  for (const auto& q : resolve_spec(spec)) {
    const ColoringCount c = coloring_count(p, q.quandle, threads);
    out << "quandle: " << q.name << '\n';
    out << "colorings: " << c.count << '\n';
    out << "non_constant: " << (c.non_constant ? "true" : "false") << '\n';
  }
  return kOk;
}

int cmd_knot_distinguish(const Diagram& a, const Diagram& b, const std::string& library_flag,
                         unsigned threads, std::ostream& out) {
  const auto named = resolve_library(library_flag);
  const auto library = quandles_of(named);
  const Distinction d = distinguish(a, b, library, threads);
  if (d.index) {
    const auto [ca, cb] = d.counts[*d.index];
    out << "distinguished by " << named[*d.index].name << " (" << ca << " vs " << cb << ")\n";
    return kOk;
  }
  out << "indistinguishable by library\n";
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    out << "  " << named[i].name << ": " << d.counts[i].first << " vs " << d.counts[i].second << '\n';
  }
  return kDomain;
}

int cmd_census(std::size_t max_order, std::ostream& out) {
  const auto counts = census_counts(max_order);
  for (std::size_t k = 0; k < counts.size(); ++k) out << "order " << k + 1 << ": " << counts[k] << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quandle toolkit: finite and free quandles, presentations, knot colorings", "qtk"};
  app.require_subcommand(1);

  std::string file, spec, out_file, action, gens_flag, pres, t1, t2, library;
  std::string braid, crossings, braid_a, braid_b, crossings_a, crossings_b;
  std::vector<std::string> elems;
  std::size_t budget = 1000;
  std::size_t max_order = 0;
  unsigned threads = 1;

  auto* verify = app.add_subcommand("verify", "Check the quandle axioms of a table file");
  verify->add_option("file", file, "Quandle table file")->required();

  auto* make = app.add_subcommand("make", "Write the table of a named quandle");
  make->add_option("spec", spec, "Quandle spec, e.g. dihedral:3")->required();
  make->add_option("-o,--out", out_file, "Output file (default stdout)");

  auto* inn = app.add_subcommand("inn", "Order and generators of the inner automorphism group");
  inn->add_option("spec", spec, "Quandle spec")->required();

  auto* freeq = app.add_subcommand("freeq", "Free quandle elements: normalize, op, opinv, embed, separate");
  freeq->add_option("action", action, "normalize | op | opinv | embed | separate")
      ->required()
      ->check(CLI::IsMember({"normalize", "op", "opinv", "embed", "separate"}));
  freeq->add_option("elements", elems, "Elements written `a` or `a ^ <word>`")->required();
  freeq->add_option("--gens", gens_flag, "Comma-separated generator names (default: names used, sorted)");

  auto* present = app.add_subcommand("present", "Finitely presented quandles");
  present->require_subcommand(1);
  auto* homs = present->add_subcommand("homs", "Enumerate homomorphisms into a finite quandle");
  homs->add_option("presentation", pres, "Presentation file")->required();
  homs->add_option("quandle", spec, "Target quandle spec")->required();
  homs->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* decide = present->add_subcommand("decide", "Semi-decide equality of two terms");
  decide->add_option("presentation", pres, "Presentation file")->required();
  decide->add_option("t1", t1, "First term")->required();
  decide->add_option("t2", t2, "Second term")->required();
  decide->add_option("--budget", budget, "Rewrite expansion budget");
  decide->add_option("--library", library, "Comma-separated quandle specs for separation");
  decide->add_option("--threads", threads, "Accepted for uniformity; the search is sequential")
      ->check(CLI::PositiveNumber);

  auto* knot = app.add_subcommand("knot", "Knot diagrams and quandle coloring invariants");
  knot->require_subcommand(1);
  auto* colorings = knot->add_subcommand("colorings", "Count colorings of a diagram");
  colorings->add_option("--braid", braid, "Braid: strands=<k> followed by signed letters");
  colorings->add_option("--crossings", crossings, "Crossing-list file");
  colorings->add_option("--quandle", spec, "Target quandle spec")->required();
  colorings->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* dist = knot->add_subcommand("distinguish", "Find a library quandle separating two diagrams");
  dist->add_option("--braid-a", braid_a, "First braid");
  dist->add_option("--crossings-a", crossings_a, "First crossing-list file");
  dist->add_option("--braid-b", braid_b, "Second braid");
  dist->add_option("--crossings-b", crossings_b, "Second crossing-list file");
  dist->add_option("--library", library, "Comma-separated quandle specs")->required();
  dist->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* census = app.add_subcommand("census", "Count quandle tables of each order");
  census->add_option("max_order", max_order, "Largest order (at most 6)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "qtk: " << e.what() << '\n';
    return kInput;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, out);
    if (make->parsed()) return cmd_make(spec, out_file, out);
    if (inn->parsed()) return cmd_inn(spec, out);
    if (freeq->parsed()) return cmd_freeq(action, elems, gens_flag, out);
    if (homs->parsed()) return cmd_present_homs(pres, spec, threads, out);
    if (decide->parsed()) return cmd_present_decide(pres, t1, t2, budget, library, out);
    if (colorings->parsed()) {
      return cmd_knot_colorings(load_diagram(braid, crossings, "--braid/--crossings"), spec, threads, out);
    }
    if (dist->parsed()) {
      const Diagram a = load_diagram(braid_a, crossings_a, "diagram a");
      const Diagram b = load_diagram(braid_b, crossings_b, "diagram b");
      return cmd_knot_distinguish(a, b, library, threads, out);
    }
    if (census->parsed()) return cmd_census(max_order, out);
  } catch (const AxiomViolation& e) {
    err << "qtk: " << e.what() << '\n';
    return kDomain;
  } catch (const PreconditionError& e) {
    err << "qtk: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    // IoError, ParseError, MalformedInput
    err << "qtk: " << e.what() << '\n';
    return kInput;
  }
  err << "qtk: no command\n";
  return kInput;
}

}  // namespace qtk
