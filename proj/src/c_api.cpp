#include "ainf/ainf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "ainf/commands.hpp"
#include "ainf/document.hpp"
#include "ainf/error.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/simplicial.hpp"

struct ainf_algebra {
  ainf::AlgebraDocument doc;
};

struct ainf_complex {
  ainf::SimplicialPair pair;
};

namespace {

thread_local std::string last_error;

ainf_status set_error(ainf_status status, const std::string& message) {
  last_error = message;
  return status;
}

ainf_status status_of(ainf::ErrorKind kind) {
  switch (kind) {
    case ainf::ErrorKind::kParse:
      return AINF_ERR_PARSE;
    case ainf::ErrorKind::kSemantic:
      return AINF_ERR_INVALID;
    case ainf::ErrorKind::kArgument:
      return AINF_ERR_ARG;
    case ainf::ErrorKind::kRelation:
      return AINF_ERR_VERIFY;
  }
  return AINF_ERR_INTERNAL;
}

template <class F>
ainf_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return AINF_OK;
  } catch (const ainf::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(AINF_ERR_ARG, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(AINF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(AINF_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) ainf::fail(ainf::ErrorKind::kArgument, std::string(what) + " is NULL");
}

ainf::Field field_of(const char* text) { return text ? ainf::Field::parse(text) : ainf::Field::rationals(); }

void emit(const ainf::Report& r, char** report, int* passed) {
  if (passed) *passed = r.verdict.passed() ? 1 : 0;
  if (report) *report = copy_string(ainf::report_to_json(r));
}

}  // namespace

extern "C" {

const char* ainf_last_error(void) { return last_error.c_str(); }

void ainf_string_free(char* s) { std::free(s); }

ainf_status ainf_algebra_parse(const char* json, ainf_algebra** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new ainf_algebra{ainf::parse_algebra_document(json)};
  });
}

ainf_status ainf_algebra_fixture(const char* name, const char* field, ainf_algebra** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = new ainf_algebra{ainf::document_from_pair(ainf::fixture_by_name(name, field_of(field)))};
  });
}

void ainf_algebra_free(ainf_algebra* a) { delete a; }

ainf_status ainf_algebra_to_json(const ainf_algebra* a, char** out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    *out = copy_string(ainf::serialize_algebra_document(a->doc));
  });
}

int ainf_algebra_size(const ainf_algebra* a) { return a ? a->doc.algebra->size() : -1; }

ainf_status ainf_algebra_field(const ainf_algebra* a, char** out) {
  return guarded([&] {
    need(a, "algebra");
    need(out, "out");
    *out = copy_string(a->doc.algebra->field().to_string());
  });
}

ainf_status ainf_fixture_names(char** out) {
  return guarded([&] {
    need(out, "out");
    std::string text;
    for (const std::string& n : ainf::fixture_names()) text += n + "\n";
    *out = copy_string(text);
  });
}

ainf_status ainf_validate(const ainf_algebra* a, char** report, int* passed) {
  return guarded([&] {
    need(a, "algebra");
    emit(ainf::cmd_validate(a->doc), report, passed);
  });
}

ainf_status ainf_cohomology(const ainf_algebra* a, char** report, int* passed) {
  return guarded([&] {
    need(a, "algebra");
    emit(ainf::cmd_cohomology(a->doc), report, passed);
  });
}

ainf_status ainf_suspend(const ainf_algebra* a, int times, ainf_algebra** out, char** report, int* passed) {
  return guarded([&] {
    need(a, "algebra");
    ainf::SuspendOutput s = ainf::cmd_suspend(a->doc, times);
    if (out) *out = new ainf_algebra{std::move(s.document)};
    emit(s.report, report, passed);
  });
}

ainf_status ainf_verify(const ainf_algebra* a, const char* lemma, char** report, int* passed) {
  return guarded([&] {
    need(a, "algebra");
    need(lemma, "lemma");
    emit(ainf::cmd_verify(lemma, a->doc), report, passed);
  });
}

ainf_status ainf_complex_parse(const char* json, ainf_complex** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new ainf_complex{ainf::parse_complex_document(json)};
  });
}

ainf_status ainf_complex_fixture(const char* name, ainf_complex** out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    *out = new ainf_complex{ainf::complex_fixture(name)};
  });
}

void ainf_complex_free(ainf_complex* c) { delete c; }

ainf_status ainf_complex_to_json(const ainf_complex* c, char** out) {
  return guarded([&] {
    need(c, "complex");
    need(out, "out");
    *out = copy_string(ainf::serialize_complex_document(c->pair));
  });
}

ainf_status ainf_complex_cochains(const ainf_complex* c, const char* field, ainf_algebra** out) {
  return guarded([&] {
    need(c, "complex");
    need(out, "out");
    const ainf::CochainAlgebra cochains = ainf::cochain_dga(c->pair.complex, field_of(field));
    *out = new ainf_algebra{ainf::document_from_algebra(cochains.algebra)};
  });
}

ainf_status ainf_complex_pair(const ainf_complex* c, const char* field, ainf_algebra** out) {
  return guarded([&] {
    need(c, "complex");
    need(out, "out");
    const ainf::PairAlgebra p = ainf::pair_algebra(c->pair, field_of(field));
    *out = new ainf_algebra{ainf::document_from_pair(p.pair)};
  });
}

ainf_status ainf_complex_double(const ainf_complex* c, ainf_complex** out) {
  return guarded([&] {
    need(c, "complex");
    need(out, "out");
    *out = new ainf_complex{ainf::SimplicialPair{ainf::glue_double(c->pair).complex, {}}};
  });
}

ainf_status ainf_verify_sandwich(const ainf_complex* c, const char* field, char** report, int* passed) {
  return guarded([&] {
    need(c, "complex");
    emit(ainf::cmd_verify_sandwich(c->pair, field_of(field)), report, passed);
  });
}

}  // extern "C"
