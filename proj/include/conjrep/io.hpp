// JSON input/output: generator files, partial permutation literals, and
// user-supplied representation files.
//
// A generator file looks like
//   { "degree": 4, "generators": [[null, 0, 1, 2]], "inverse_closure": true }
// with 0-based point indices and null marking undefined points. The optional
// "inverse_closure" key (default true) controls whether generation adjoins
// the inverses of the generators.
//
// A representation file maps transversal idempotent ids to complete lists of
// irreducibles:
//   { "representations": { "7": [ { "degree": 1,
//       "images": { "7": [[1]], "12": [["-1/1"]] } } ] } }
// Matrix entries are integers or "num/den" strings; over GF(p) they are
// reduced mod p.

#ifndef CONJREP_IO_HPP_
#define CONJREP_IO_HPP_

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "conjrep/reps.hpp"
#include "conjrep/semigroup.hpp"

namespace conjrep {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct GeneratorInput {
  std::uint32_t degree = 0;
  std::vector<PartialPerm> generators;
  bool inverse_closure = true;
  std::string name;  // optional label (set for built-in families)
};

PartialPerm partial_perm_from_json(const json& entry, std::uint32_t degree);
ordered_json partial_perm_to_json(const PartialPerm& p);

GeneratorInput parse_generator_input(const json& j);
ordered_json generator_input_to_json(const GeneratorInput& input);

// Reads and parses a generator file; the raw bytes are returned through
// raw_out for digesting when non-null.
GeneratorInput load_generator_file(const std::string& path,
                                   std::string* raw_out = nullptr);

json parse_json_text(const std::string& text, const std::string& what);
std::string read_file(const std::string& path);

template <class Field>
std::map<ElementId, std::vector<Rep<Field>>> parse_reps_input(
    const json& j, const SemigroupTable& table, const GreenStructure& green,
    const Field& field) {
  if (!j.is_object() || !j.contains("representations") ||
      !j["representations"].is_object()) {
    throw InputError("representation file must contain a 'representations' object");
  }
  std::map<ElementId, std::vector<Rep<Field>>> out;
  for (auto it_entry = j["representations"].begin();
       it_entry != j["representations"].end(); ++it_entry) {
    const std::string key = it_entry.key();
    const json& list = it_entry.value();
    ElementId e = kNoElement;
    try {
      e = static_cast<ElementId>(std::stoul(key));
    } catch (const std::exception&) {
      throw InputError("representation key '" + key +
                       "' is not an element id");
    }
    if (e >= table.size() || !green.lambda_index_of(e)) {
      throw InputError("representation key '" + key +
                       "' is not a transversal idempotent of the table");
    }
    const auto group = maximal_subgroup(table, e);
    if (!list.is_array()) {
      throw InputError("representation list for element " + key +
                       " must be an array");
    }
    std::vector<Rep<Field>> reps;
    std::size_t index = 0;
    for (const auto& entry : list) {
      Rep<Field> rep;
      rep.base_idempotent = e;
      rep.members = group.members;
      rep.label = "supplied_" + key + "_" + std::to_string(index++);
      if (!entry.contains("degree") || !entry["degree"].is_number_unsigned()) {
        throw InputError("representation entry for element " + key +
                         " is missing a 'degree'");
      }
      rep.degree = entry["degree"].get<std::uint32_t>();
      if (!entry.contains("images") || !entry["images"].is_object()) {
        throw InputError("representation entry for element " + key +
                         " is missing an 'images' object");
      }
      for (ElementId g : group.members) {
        const std::string gkey = std::to_string(g);
        if (!entry["images"].contains(gkey)) {
          throw InputError("representation entry for element " + key +
                           " has no image for group member " + gkey);
        }
        const auto& rows = entry["images"][gkey];
        if (!rows.is_array() || rows.size() != rep.degree) {
          throw InputError("image of member " + gkey + " must be a " +
                           std::to_string(rep.degree) + "-row matrix");
        }
        Matrix<Field> m(field, rep.degree, rep.degree);
        for (std::uint32_t r = 0; r < rep.degree; ++r) {
          const auto& row = rows[r];
          if (!row.is_array() || row.size() != rep.degree) {
            throw InputError("image of member " + gkey +
                             " must be square of size " +
                             std::to_string(rep.degree));
          }
          for (std::uint32_t c = 0; c < rep.degree; ++c) {
            const auto& cell = row[c];
            if (cell.is_number_integer()) {
              m.at(r, c) = field.from_int(cell.get<std::int64_t>());
            } else if (cell.is_string()) {
              m.at(r, c) =
                  field.from_rational(parse_rational(cell.get<std::string>()));
            } else {
              throw InputError("matrix entries must be integers or "
                               "'num/den' strings");
            }
          }
        }
        rep.images.push_back(std::move(m));
      }
      reps.push_back(std::move(rep));
    }
    out.emplace(e, std::move(reps));
  }
  return out;
}

}  // namespace conjrep

#endif  // CONJREP_IO_HPP_
