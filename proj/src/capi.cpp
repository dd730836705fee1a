#include "unfolder/unfolder.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "unfolder/document.hpp"
#include "unfolder/error.hpp"
#include "unfolder/generators.hpp"
#include "unfolder/report.hpp"
#include "unfolder/subdivision.hpp"
#include "unfolder/unfolding.hpp"
#include "unfolder/verify.hpp"

struct unf_complex {
  unfolder::Document doc;
};

struct unf_unfolding {
  unfolder::UnfoldingResult result;
};

namespace {

thread_local std::string last_error;

unf_status status_of(unfolder::ErrorCode code) {
  return static_cast<unf_status>(static_cast<int>(code) + 1);
}

template <class F>
unf_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return UNF_OK;
  } catch (const unfolder::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return UNF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return UNF_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw unfolder::Error(unfolder::ErrorCode::BadParameter, what);
}

unf_complex* wrap(unfolder::Document doc) { return new unf_complex{std::move(doc)}; }

unfolder::Document subdivide(const unfolder::Document& in, unf_subdivision kind, int facet) {
  using namespace unfolder;
  Document out;
  switch (kind) {
    case UNF_BARYCENTRIC:
      out.complex = in.is_pseudo() ? barycentric(std::get<PseudoComplex>(in.complex)).result
                                   : barycentric(std::get<AbstractComplex>(in.complex)).result;
      break;
    case UNF_ANTIPRISMATIC:
      out.complex = in.is_pseudo() ? antiprismatic(std::get<PseudoComplex>(in.complex)).result
                                   : antiprismatic(std::get<AbstractComplex>(in.complex)).result;
      break;
    case UNF_STELLAR: {
      AbstractComplex k = in.is_pseudo() ? to_abstract(std::get<PseudoComplex>(in.complex))
                                         : std::get<AbstractComplex>(in.complex);
      out.complex = facet < 0 ? stellar_all(k) : stellar(k, facet);
      break;
    }
    default:
      throw Error(ErrorCode::BadParameter, "unknown subdivision kind");
  }
  return out;
}

}  // namespace

extern "C" {

const char* unf_status_name(unf_status status) {
  if (status == UNF_OK) return "OK";
  if (status == UNF_ERR_INTERNAL) return "Internal";
  if (status > UNF_OK && status < UNF_ERR_INTERNAL)
    return unfolder::to_string(static_cast<unfolder::ErrorCode>(static_cast<int>(status) - 1));
  return "Unknown";
}

const char* unf_last_error(void) { return last_error.c_str(); }

void unf_string_free(char* s) { std::free(s); }

unf_status unf_parse(const char* text, unf_complex** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = wrap(unfolder::parse_document(text));
  });
}

unf_status unf_gallery(const char* name, unf_complex** out) {
  return guarded([&] {
    require(name && out, "null argument");
    auto e = unfolder::gallery(name);
    unfolder::Document doc;
    if (e.complex) {
      doc.complex = *e.complex;
    } else {
      doc.complex = e.pseudo;
    }
    *out = wrap(std::move(doc));
  });
}

void unf_complex_free(unf_complex* c) { delete c; }

unf_status unf_emit(const unf_complex* c, char** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = copy_string(unfolder::emit(c->doc));
  });
}

unf_status unf_analyze(const unf_complex* c, int base, char** report) {
  return guarded([&] {
    require(c && report, "null argument");
    require(base >= 0 && base < unf_facet_count(c), "base facet out of range");
    *report = copy_string(unfolder::analyze_report(c->doc, base));
  });
}

int unf_dim(const unf_complex* c) {
  if (!c) return -1;
  return std::visit([](const auto& k) { return k.dim(); }, c->doc.complex);
}

int unf_facet_count(const unf_complex* c) {
  if (!c) return -1;
  return std::visit([](const auto& k) { return static_cast<int>(k.facet_count()); }, c->doc.complex);
}

int unf_is_pseudo(const unf_complex* c) { return c && c->doc.is_pseudo() ? 1 : 0; }

unf_status unf_group_order(const unf_complex* c, int base, size_t* order) {
  return guarded([&] {
    require(c && order, "null argument");
    require(base >= 0 && base < unf_facet_count(c), "base facet out of range");
    *order = unfolder::projectivity_group(c->doc.pseudo(), base).group.order();
  });
}

unf_status unf_unfold(const unf_complex* c, unf_mode mode, int base, unf_unfolding** out) {
  return guarded([&] {
    require(c && out, "null argument");
    require(mode == UNF_COMPLETE || mode == UNF_PARTIAL, "unknown unfolding mode");
    require(base >= 0 && base < unf_facet_count(c), "base facet out of range");
    auto p = c->doc.pseudo();
    auto result = mode == UNF_COMPLETE ? unfolder::complete_unfolding(p, base) : unfolder::partial_unfolding(p, base);
    *out = new unf_unfolding{std::move(result)};
  });
}

void unf_unfolding_free(unf_unfolding* u) { delete u; }

unf_status unf_unfolding_total(const unf_unfolding* u, unf_complex** out) {
  return guarded([&] {
    require(u && out, "null argument");
    unfolder::Document doc;
    doc.complex = u->result.total;
    doc.projection = u->result.projection.facet_map;
    *out = wrap(std::move(doc));
  });
}

int unf_unfolding_component_count(const unf_unfolding* u) { return u ? u->result.component_count : -1; }

unf_status unf_unfolding_component(const unf_unfolding* u, int k, unf_complex** out) {
  return guarded([&] {
    require(u && out, "null argument");
    require(k >= 0 && k < u->result.component_count, "component index out of range");
    auto comp = unfolder::extract_component(u->result, k);
    unfolder::Document doc;
    doc.complex = std::move(comp.complex);
    doc.projection = comp.projection.facet_map;
    *out = wrap(std::move(doc));
  });
}

unf_status unf_subdivide(const unf_complex* c, unf_subdivision kind, int facet, int iterations, unf_complex** out) {
  return guarded([&] {
    require(c && out, "null argument");
    require(iterations >= 0, "iterations must be non-negative");
    unfolder::Document doc = c->doc;
    doc.projection.clear();
    for (int i = 0; i < iterations; ++i) doc = subdivide(doc, kind, facet);
    *out = wrap(std::move(doc));
  });
}

unf_status unf_verify(const char* suite, char** report, int* all_passed) {
  return guarded([&] {
    require(suite && report && all_passed, "null argument");
    auto results = unfolder::run_checks(suite);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    *report = copy_string(unfolder::format_results(results));
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
