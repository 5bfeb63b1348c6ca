#include "conjrep/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "conjrep/algebra.hpp"
#include "conjrep/conjugacy.hpp"
#include "conjrep/reps.hpp"
#include "conjrep/util.hpp"

namespace conjrep {

namespace {

ordered_json partition_json(const SemigroupTable& table,
                            const ConjugacyPartition& p, bool with_members) {
  ordered_json classes = ordered_json::array();
  for (std::uint32_t k = 0; k < p.classes.size(); ++k) {
    ordered_json c;
    c["representative"] = p.info[k].representative;
    c["representative_map"] =
        table.element(p.info[k].representative).str();
    c["size"] = p.classes[k].size();
    if (p.info[k].subrank) c["subrank"] = *p.info[k].subrank;
    if (p.info[k].group_witness) c["group_class_witness"] = *p.info[k].group_witness;
    if (with_members) c["members"] = p.classes[k];
    classes.push_back(std::move(c));
  }
  return classes;
}

template <class Field>
ordered_json representation_section(const SemigroupTable& table,
                                    const GreenStructure& green,
                                    const Field& field, const json* supplied_reps) {
  std::map<ElementId, std::vector<Rep<Field>>> supplied;
  if (supplied_reps) {
    supplied = parse_reps_input(*supplied_reps, table, green, field);
  }
  const auto lifts = all_irreps(table, green, field, supplied);
  const auto cert = certify_lifts(table, lifts);

  ordered_json r;
  r["field"] = field.name();
  r["count"] = lifts.size();
  std::vector<std::uint32_t> degrees;
  ordered_json items = ordered_json::array();
  std::size_t certified = 0;
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    ordered_json item;
    item["transversal"] = lifts[i].lambda_id;
    item["label"] = lifts[i].label;
    item["source_degree"] = lifts[i].source_degree;
    item["degree"] = lifts[i].degree;
    item["commutant_dimension"] = cert.commutant_dims[i];
    items.push_back(std::move(item));
    degrees.push_back(lifts[i].degree);
    if (cert.commutant_dims[i] == 1) ++certified;
  }
  std::sort(degrees.begin(), degrees.end());
  r["lifts"] = std::move(items);
  r["degrees"] = degrees;
  r["sum_degree_squares"] = cert.sum_degree_squares;
  r["sum_matches_order"] = (cert.sum_degree_squares == table.size());
  r["all_irreducible"] = cert.all_irreducible;
  r["pairwise_inequivalent"] = cert.pairwise_inequivalent;
  r["intertwiners"] = cert.intertwiners;
  r["certified_count"] = cert.pairwise_inequivalent ? certified : 0;
  return r;
}

ordered_json table_section(const SemigroupTable& table, const GreenStructure& green) {
  ordered_json t;
  t["size"] = table.size();
  t["degree"] = table.degree();
  t["generators"] = table.generator_ids();
  t["is_inverse"] = table.inverse_closed();
  if (table.identity()) {
    t["identity"] = *table.identity();
  } else {
    t["identity"] = nullptr;
  }
  t["idempotent_count"] = table.idempotent_ids().size();
  ordered_json d_classes = ordered_json::array();
  std::uint64_t dimension_sum = 0;
  for (std::uint32_t k = 0; k < green.d_class_count(); ++k) {
    const ElementId e = green.lambda[k];
    const auto group = maximal_subgroup(table, e);
    const auto n_e = green.d_idempotents[k].size();
    dimension_sum += static_cast<std::uint64_t>(n_e) * n_e * group.members.size();
    ordered_json d;
    d["index"] = k;
    d["rank"] = table.element(e).rank();
    d["size"] = green.d_classes[k].size();
    d["idempotent_count"] = n_e;
    d["transversal"] = e;
    d["group_order"] = group.members.size();
    ordered_json connectors = ordered_json::array();
    for (ElementId f : green.d_idempotents[k]) {
      connectors.push_back({f, connecting_element(table, f, e)});
    }
    d["connectors"] = std::move(connectors);
    d_classes.push_back(std::move(d));
  }
  t["d_classes"] = std::move(d_classes);
  t["transversal"] = green.lambda;
  t["dimension_sum"] = dimension_sum;
  return t;
}

}  // namespace

std::uint64_t parse_field_spec(const std::string& spec) {
  if (spec == "q" || spec == "Q") return 0;
  if (spec.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(spec.substr(3));
    } catch (const std::exception&) {
      throw InputError("cannot parse field spec '" + spec + "'");
    }
    if (!is_prime(p)) {
      throw InputError("field modulus " + std::to_string(p) + " is not prime");
    }
    return p;
  }
  throw InputError("unknown field spec '" + spec + "'; expected q or fp:<prime>");
}

std::string input_digest(const std::string& raw_bytes) {
  return hex64(fnv1a(raw_bytes.data(), raw_bytes.size()));
}

ordered_json run_analysis(const GeneratorInput& input, const AnalyzeOptions& options,
                          const std::string& digest, const json* supplied_reps) {
  const std::uint64_t characteristic = parse_field_spec(options.field_spec);

  ordered_json report;
  report["tool"] = "conjrep";
  ordered_json in;
  in["digest"] = digest;
  if (!input.name.empty()) in["name"] = input.name;
  in["degree"] = input.degree;
  in["generator_count"] = input.generators.size();
  in["inverse_closure"] = input.inverse_closure;
  if (options.seed) {
    in["seed"] = *options.seed;
  } else {
    in["seed"] = nullptr;
  }
  report["input"] = std::move(in);
  ordered_json opts;
  opts["field"] = options.field_spec;
  opts["cap"] = options.cap;
  opts["skip_reps"] = options.skip_reps;
  report["options"] = std::move(opts);

  GenerateOptions gen;
  gen.cap = options.cap;
  gen.inverse_closure = input.inverse_closure;
  const auto table = SemigroupTable::generate(input.degree, input.generators, gen);
  const auto inverse = check_inverse(table);
  if (!inverse.is_inverse) {
    throw GuardError("not an inverse semigroup: " + inverse.message);
  }
  const auto green = green_structure(table);
  report["table"] = table_section(table, green);

  auto brute = s_conjugacy_bruteforce(table);
  annotate_subranks(table, green, brute);
  const auto structural = s_conjugacy_structural(table, green);

  ordered_json conj;
  conj["s_class_count_brute_force"] = brute.class_count();
  conj["s_class_count_structural"] = structural.class_count();
  conj["methods_agree"] = brute.same_partition(structural);
  std::uint64_t group_class_sum = 0;
  for (ElementId e : green.lambda) {
    group_class_sum +=
        group_conjugacy_classes(table, maximal_subgroup(table, e)).class_count();
  }
  conj["group_class_sum"] = group_class_sum;
  if (table.identity()) {
    const auto units = g_conjugacy(table);
    conj["unit_class_count"] = units.class_count();
    conj["unit_classes"] = partition_json(table, units, false);
  } else {
    conj["unit_class_count"] = nullptr;
    conj["unit_classes"] = nullptr;
  }
  conj["classes"] = partition_json(table, structural, true);
  report["conjugacy"] = std::move(conj);

  if (options.skip_reps) {
    report["representations"] = nullptr;
    ordered_json bij;
    bij["s_conjugacy_classes"] = structural.class_count();
    bij["irreducible_lifts"] = nullptr;
    bij["verdict"] = "SKIPPED";
    report["bijection"] = std::move(bij);
    return report;
  }

  if (!characteristic_guard(table, green, characteristic)) {
    throw GuardError("characteristic " + std::to_string(characteristic) +
                     " divides the order of a maximal subgroup; use another "
                     "field or --skip-reps");
  }

  ordered_json reps;
  if (characteristic == 0) {
    reps = representation_section(table, green, RationalField{}, supplied_reps);
  } else {
    reps = representation_section(table, green, PrimeField(characteristic),
                                  supplied_reps);
  }
  const bool certified = reps["all_irreducible"].get<bool>() &&
                         reps["pairwise_inequivalent"].get<bool>();
  const auto lift_count = reps["count"].get<std::size_t>();
  report["representations"] = std::move(reps);

  ordered_json bij;
  bij["s_conjugacy_classes"] = structural.class_count();
  bij["irreducible_lifts"] = lift_count;
  bij["verdict"] =
      (certified && lift_count == structural.class_count()) ? "PASS" : "FAIL";
  report["bijection"] = std::move(bij);
  return report;
}

std::string human_summary(const ordered_json& report) {
  std::ostringstream os;
  const auto& in = report.at("input");
  os << "conjrep analysis";
  if (in.contains("name") && in.at("name").is_string()) {
    os << ": " << in.at("name").get<std::string>();
  }
  os << " (degree " << in.at("degree") << ", " << in.at("generator_count")
     << " generators)\n";
  const auto& t = report.at("table");
  os << "table: " << t.at("size") << " elements, "
     << t.at("d_classes").size() << " D-classes, inverse: "
     << (t.at("is_inverse").get<bool>() ? "yes" : "no") << "\n";
  const auto& c = report.at("conjugacy");
  os << "conjugacy: " << c.at("s_class_count_brute_force")
     << " S-classes brute force, " << c.at("s_class_count_structural")
     << " structural, methods agree: "
     << (c.at("methods_agree").get<bool>() ? "yes" : "no");
  if (c.at("unit_class_count").is_number()) {
    os << ", " << c.at("unit_class_count") << " unit-conjugacy classes";
  }
  os << "\n";
  if (report.at("representations").is_null()) {
    os << "representations: skipped\n";
  } else {
    const auto& r = report.at("representations");
    os << "representations over " << r.at("field").get<std::string>() << ": "
       << r.at("count") << " lifts, degrees " << r.at("degrees").dump()
       << ", irreducible: " << (r.at("all_irreducible").get<bool>() ? "all" : "NOT all")
       << ", pairwise inequivalent: "
       << (r.at("pairwise_inequivalent").get<bool>() ? "yes" : "no") << "\n";
  }
  const auto& b = report.at("bijection");
  os << "bijection verdict: " << b.at("verdict").get<std::string>();
  if (!b.at("irreducible_lifts").is_null()) {
    os << " (" << b.at("s_conjugacy_classes") << " classes, "
       << b.at("irreducible_lifts") << " irreducible lifts)";
  }
  os << "\n";
  return os.str();
}

}  // namespace conjrep
