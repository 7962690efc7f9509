#ifndef MCGFIN_IO_HPP_
#define MCGFIN_IO_HPP_

// JSON text formats.  Rationals are "p/q" strings, field elements are
// coefficient vectors (low degree first) and matrices are row lists of
// field elements.  Emitted text is canonical: parse followed by emit
// reproduces it byte for byte.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "mcgfin/autgen.hpp"
#include "mcgfin/conj.hpp"
#include "mcgfin/finimg.hpp"
#include "mcgfin/orbit.hpp"

namespace mcgfin::io {

  using json = nlohmann::json;

  json     to_json(NumberField const& k);
  FieldPtr field_from_json(json const& j, bool unsafe_accept = false);

  json         to_json(FieldElement const& a);
  FieldElement element_from_json(json const& j, FieldPtr const& k);

  json   to_json(Matrix const& m);
  Matrix matrix_from_json(json const& j, FieldPtr const& k);

  json       to_json(GroupShape const& s);
  GroupShape shape_from_json(json const& j);

  json     to_json(RepTuple const& rep);
  RepTuple rep_from_json(json const& j, bool unsafe_accept = false);

  json         to_json(Word const& w);
  json         to_json(Substitution const& s);
  Substitution substitution_from_json(json const& j, std::string default_name = "");

  json to_json(OrbitResult const& r);
  json to_json(ConjugacyVerdict const& v);
  json conjugator_certificate(Matrix const& b);
  json to_json(ImageVerdict const& v);
  json to_json(ScreenReport const& s);

  std::string dump(json const& j);  // canonical text with trailing newline
  json        parse(std::string const& text);

  json        read_json_file(std::filesystem::path const& path);
  std::string read_text_file(std::filesystem::path const& path);
  void        write_text_file(std::filesystem::path const& path,
                              std::string const&           text);

  RepTuple     read_rep(std::filesystem::path const& path, bool unsafe_accept = false);
  Substitution read_substitution(std::filesystem::path const& path);

}  // namespace mcgfin::io

#endif  // MCGFIN_IO_HPP_
