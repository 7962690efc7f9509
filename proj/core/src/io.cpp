#include "mcgfin/io.hpp"

#include <fstream>
#include <sstream>

#include "mcgfin/error.hpp"

namespace mcgfin::io {

  namespace {

    [[noreturn]] void fail(std::string const& what) {
      throw Error(ErrorCode::ParseError, what);
    }

    json const& member(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        fail(std::string("missing key \"") + key + "\"");
      }
      return j.at(key);
    }

    int int_member(json const& j, char const* key) {
      auto const& v = member(j, key);
      if (!v.is_number_integer()) {
        fail(std::string("\"") + key + "\" must be an integer");
      }
      return v.get<int>();
    }

    Rational rational_from(json const& j) {
      if (!j.is_string()) {
        fail("rationals must be strings like \"p/q\", got " + j.dump());
      }
      return parse_rational(j.get<std::string>());
    }

  }  // namespace

  json to_json(NumberField const& k) {
    json poly = json::array();
    for (auto const& c : k.min_poly()) {
      poly.push_back(to_string(c));
    }
    return {{"var", k.variable()}, {"minpoly", poly}};
  }

  FieldPtr field_from_json(json const& j, bool unsafe_accept) {
    auto const& poly = member(j, "minpoly");
    if (!poly.is_array() || poly.empty()) {
      fail("\"minpoly\" must be a nonempty array");
    }
    QPoly p;
    for (auto const& c : poly) {
      p.push_back(rational_from(c));
    }
    std::string var = "z";
    if (j.contains("var")) {
      if (!j.at("var").is_string()) {
        fail("\"var\" must be a string");
      }
      var = j.at("var").get<std::string>();
    }
    return NumberField::make(std::move(p), var, unsafe_accept);
  }

  json to_json(FieldElement const& a) {
    json out = json::array();
    for (auto const& c : a.coeffs()) {
      out.push_back(to_string(c));
    }
    return out;
  }

  FieldElement element_from_json(json const& j, FieldPtr const& k) {
    if (!j.is_array() || j.size() != k->degree()) {
      fail("field element must be an array of " + std::to_string(k->degree())
           + " rationals, got " + j.dump());
    }
    std::vector<Rational> c;
    for (auto const& x : j) {
      c.push_back(rational_from(x));
    }
    return FieldElement(k, std::move(c));
  }

  json to_json(Matrix const& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.size(); ++j) {
        row.push_back(to_json(m(i, j)));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  Matrix matrix_from_json(json const& j, FieldPtr const& k) {
    if (!j.is_array() || j.empty()) {
      fail("matrix must be a nonempty array of rows");
    }
    std::size_t               n = j.size();
    std::vector<FieldElement> e;
    for (auto const& row : j) {
      if (!row.is_array() || row.size() != n) {
        fail("matrix must be square");
      }
      for (auto const& x : row) {
        e.push_back(element_from_json(x, k));
      }
    }
    return Matrix(k, n, std::move(e));
  }

  json to_json(GroupShape const& s) {
    if (s.is_surface()) {
      return {{"kind", "surface"}, {"genus", s.genus()}, {"punctures", s.punctures()}};
    }
    return {{"kind", "free"}, {"rank", s.rank()}};
  }

  GroupShape shape_from_json(json const& j) {
    auto const& kind = member(j, "kind");
    if (kind == "free") {
      return GroupShape::free(int_member(j, "rank"));
    }
    if (kind == "surface") {
      return GroupShape::surface(int_member(j, "genus"), int_member(j, "punctures"));
    }
    fail("shape kind must be \"free\" or \"surface\"");
  }

  json to_json(RepTuple const& rep) {
    json mats = json::array();
    for (auto const& a : rep.matrices()) {
      mats.push_back(to_json(a));
    }
    return {{"field", to_json(rep.field())},
            {"shape", to_json(rep.shape())},
            {"matrices", mats}};
  }

  RepTuple rep_from_json(json const& j, bool unsafe_accept) {
    FieldPtr    k     = field_from_json(member(j, "field"), unsafe_accept);
    GroupShape  shape = shape_from_json(member(j, "shape"));
    auto const& mats  = member(j, "matrices");
    if (!mats.is_array() || mats.empty()) {
      fail("\"matrices\" must be a nonempty array");
    }
    std::vector<Matrix> m;
    for (auto const& a : mats) {
      m.push_back(matrix_from_json(a, k));
    }
    return RepTuple(shape, std::move(m));
  }

  json to_json(Word const& w) {
    return format_word(w);
  }

  json to_json(Substitution const& s) {
    json img = json::array(), inv = json::array();
    for (auto const& w : s.images()) {
      img.push_back(format_word(w));
    }
    for (auto const& w : s.inverse_images()) {
      inv.push_back(format_word(w));
    }
    json out = {{"rank", s.rank()}, {"images", img}, {"inverse_images", inv}};
    if (!s.name().empty()) {
      out["name"] = s.name();
    }
    return out;
  }

  Substitution substitution_from_json(json const& j, std::string default_name) {
    int  rank  = int_member(j, "rank");
    auto words = [&](char const* key) {
      auto const&       list = member(j, key);
      std::vector<Word> out;
      if (!list.is_array()) {
        fail(std::string("\"") + key + "\" must be an array of words");
      }
      for (auto const& w : list) {
        if (!w.is_string()) {
          fail("words must be strings like \"x1 x2^-1\"");
        }
        out.push_back(parse_word(w.get<std::string>()));
      }
      return out;
    };
    std::string name = std::move(default_name);
    if (j.contains("name")) {
      if (!j.at("name").is_string()) {
        fail("\"name\" must be a string");
      }
      name = j.at("name").get<std::string>();
    }
    return Substitution(rank, words("images"), words("inverse_images"), name);
  }

  json to_json(OrbitResult const& r) {
    json out;
    out["verdict"]         = std::string(verdict_name(r.verdict));
    out["moves"]           = r.moves;
    out["conjugacy_scope"] = r.conjugacy_scope;
    out["classes"]         = r.class_count();
    out["depth"]           = r.depth;
    json edges             = json::array();
    for (auto const& e : r.edges) {
      edges.push_back(json::array({e.from, e.move, e.to}));
    }
    out["edges"] = edges;
    json reps    = json::array();
    for (auto const& rep : r.representatives) {
      reps.push_back(to_json(rep));
    }
    out["representatives"] = reps;
    if (r.verdict == OrbitResult::Verdict::BudgetExceeded) {
      out["explored_classes"] = r.class_count();
      out["frontier_size"]    = r.frontier_size;
      out["budget_reason"]    = r.budget_reason;
      json diags              = json::array();
      for (auto const& d : r.diagnostics) {
        json traces = json::array();
        for (auto const& t : d.traces) {
          traces.push_back(to_json(t));
        }
        diags.push_back({{"move", d.move}, {"probe_traces", traces}});
      }
      out["diagnostics"] = diags;
    }
    if (r.witness) {
      out["witness"] = {{"generator", r.witness->generator},
                        {"scalar", to_json(r.witness->scalar)},
                        {"reason", "non-root-of-unity scalar escapes under d-powers"}};
    }
    return out;
  }

  json conjugator_certificate(Matrix const& b) {
    return {{"certificate", "conjugator"},
            {"field", to_json(b.field())},
            {"matrix", to_json(b)}};
  }

  json to_json(ConjugacyVerdict const& v) {
    json out;
    switch (v.kind) {
      case ConjugacyVerdict::Kind::Conjugate: out["verdict"] = "conjugate"; break;
      case ConjugacyVerdict::Kind::NotConjugate:
        out["verdict"] = "not_conjugate";
        break;
      case ConjugacyVerdict::Kind::Unsupported: out["verdict"] = "unsupported"; break;
    }
    out["scope"] = v.over_field_only ? "over K" : "absolute";
    if (v.intertwiner_dimension) {
      out["intertwiner_dimension"] = *v.intertwiner_dimension;
    }
    if (v.conjugator) {
      out["certificate"] = conjugator_certificate(*v.conjugator);
    }
    return out;
  }

  json to_json(ImageVerdict const& v) {
    json out;
    out["verdict"] = std::string(image_kind_name(v.kind));
    switch (v.kind) {
      case ImageVerdict::Kind::FiniteImage: out["order"] = v.order; break;
      case ImageVerdict::Kind::CapExceeded: out["elements_found"] = v.found; break;
      case ImageVerdict::Kind::InfiniteImage:
        out["witness"] = format_word(v.witness->word);
        out["reason"]  = std::string(reason_code(v.witness->reason));
        break;
    }
    return out;
  }

  json to_json(ScreenReport const& s) {
    json out;
    if (s.det.passed) {
      out["det_screen"] = {{"result", "pass"}, {"orders", s.det.orders}};
    } else {
      out["det_screen"] = {{"result", "fail"}, {"generator", s.det.failed_index}};
    }
    if (s.all_integral) {
      out["integrality"] = {{"result", "all_integral"}};
    } else {
      auto const& e      = *s.non_integral_entry;
      out["integrality"] = {{"result", "not_visibly_integral"},
                            {"generator", e[0]},
                            {"row", e[1]},
                            {"column", e[2]}};
    }
    out["exponent_sample"] = {{"max_order", s.max_sampled_order}};
    if (s.infinite_order_word) {
      out["exponent_sample"]["infinite_order_word"] = format_word(*s.infinite_order_word);
    }
    return out;
  }

  std::string dump(json const& j) {
    return j.dump(2) + "\n";
  }

  json parse(std::string const& text) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      fail(e.what());
    }
  }

  std::string read_text_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      fail("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  json read_json_file(std::filesystem::path const& path) {
    try {
      return parse(read_text_file(path));
    } catch (Error const& e) {
      fail(path.string() + ": " + e.what());
    }
  }

  void write_text_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
    }
    out << text;
  }

  RepTuple read_rep(std::filesystem::path const& path, bool unsafe_accept) {
    return rep_from_json(read_json_file(path), unsafe_accept);
  }

  Substitution read_substitution(std::filesystem::path const& path) {
    return substitution_from_json(read_json_file(path), path.stem().string());
  }

}  // namespace mcgfin::io
