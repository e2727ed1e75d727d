#include <qsrank/qsrank.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "bar_tableaux.hpp"
#include "characters.hpp"
#include "error.hpp"
#include "partitions.hpp"
#include "ppoly.hpp"
#include "qfunctions.hpp"
#include "srank.hpp"
#include "verify.hpp"

struct qsr_poly {
  qsrank::PPoly value;
};

namespace {

thread_local std::string last_error;

qsr_status fail(qsr_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename F>
qsr_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return QSR_OK;
  } catch (const qsrank::ParseError& e) {
    return fail(QSR_E_PARSE, e.what());
  } catch (const qsrank::InvalidArgument& e) {
    return fail(QSR_E_INVALID, e.what());
  } catch (const qsrank::BoundExceeded& e) {
    return fail(QSR_E_BOUND, e.what());
  } catch (const std::exception& e) {
    return fail(QSR_E_INTERNAL, e.what());
  } catch (...) {
    return fail(QSR_E_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qsrank::Route to_route(qsr_route route, const qsrank::SkewShape& shape) {
  switch (route) {
    case QSR_ROUTE_DEFAULT:
      return shape.straight() ? qsrank::Route::Morris : qsrank::Route::Pfaffian;
    case QSR_ROUTE_MORRIS:
      return qsrank::Route::Morris;
    case QSR_ROUTE_RECUR:
      return qsrank::Route::Recurrence;
    case QSR_ROUTE_PF:
      return qsrank::Route::Pfaffian;
    case QSR_ROUTE_STRIPS:
      return qsrank::Route::Strips;
  }
  throw qsrank::InvalidArgument("unknown route");
}

#define QSR_REQUIRE(ptr)                                      \
  do {                                                        \
    if (!(ptr)) return fail(QSR_E_NULL, #ptr " is NULL");     \
  } while (0)

}  // namespace

extern "C" {

const char* qsr_last_error(void) { return last_error.c_str(); }

const char* qsr_status_name(qsr_status status) {
  switch (status) {
    case QSR_OK:
      return "ok";
    case QSR_E_PARSE:
      return "parse error";
    case QSR_E_INVALID:
      return "invalid argument";
    case QSR_E_BOUND:
      return "bound exceeded";
    case QSR_E_NULL:
      return "null argument";
    case QSR_E_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void qsr_string_free(char* s) { std::free(s); }

qsr_status qsr_qfun(const char* shape, qsr_route route, qsr_poly** out) {
  QSR_REQUIRE(shape);
  QSR_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    qsrank::SkewShape s = qsrank::parse_shape(shape);
    *out = new qsr_poly{qsrank::q_function(s, to_route(route, s))};
  });
}

void qsr_poly_free(qsr_poly* p) { delete p; }

qsr_status qsr_poly_text(const qsr_poly* p, char** out) {
  QSR_REQUIRE(p);
  QSR_REQUIRE(out);
  return guarded([&] { *out = dup_string(p->value.to_text()); });
}

qsr_status qsr_poly_json(const qsr_poly* p, char** out) {
  QSR_REQUIRE(p);
  QSR_REQUIRE(out);
  return guarded([&] { *out = dup_string(p->value.to_json()); });
}

qsr_status qsr_poly_from_json(const char* json, qsr_poly** out) {
  QSR_REQUIRE(json);
  QSR_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new qsr_poly{qsrank::PPoly::from_json(json)}; });
}

qsr_status qsr_poly_term_count(const qsr_poly* p, size_t* out) {
  QSR_REQUIRE(p);
  QSR_REQUIRE(out);
  *out = p->value.term_count();
  return QSR_OK;
}

qsr_status qsr_poly_lowest_degree(const qsr_poly* p, int* out) {
  QSR_REQUIRE(p);
  QSR_REQUIRE(out);
  return guarded([&] { *out = p->value.lowest_degree(); });
}

qsr_status qsr_poly_bottom(const qsr_poly* p, qsr_poly** out) {
  QSR_REQUIRE(p);
  QSR_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new qsr_poly{p->value.bottom()}; });
}

qsr_status qsr_poly_equal(const qsr_poly* a, const qsr_poly* b, int* out) {
  QSR_REQUIRE(a);
  QSR_REQUIRE(b);
  QSR_REQUIRE(out);
  *out = a->value == b->value ? 1 : 0;
  return QSR_OK;
}

qsr_status qsr_srank(const char* shape, int* out) {
  QSR_REQUIRE(shape);
  QSR_REQUIRE(out);
  return guarded([&] { *out = qsrank::srank_skew(qsrank::parse_shape(shape)); });
}

qsr_status qsr_srank_bruteforce(const char* shape, int bound, int* out, char** witness) {
  QSR_REQUIRE(shape);
  QSR_REQUIRE(out);
  if (witness) *witness = nullptr;
  return guarded([&] {
    qsrank::SkewShape s = qsrank::parse_shape(shape);
    qsrank::BarTableau t = qsrank::minimal_bar_tableau(s, bound > 0 ? bound : qsrank::kDefaultBruteForceBound);
    *out = t.bars();
    if (witness) *witness = dup_string(qsrank::format_filling(qsrank::render_filling(t)));
  });
}

qsr_status qsr_character(const char* lambda, const char* pi, char** out) {
  QSR_REQUIRE(lambda);
  QSR_REQUIRE(pi);
  QSR_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    qsrank::StrictPartition lam = qsrank::parse_strict(lambda);
    std::vector<int> parts = qsrank::parse_parts(pi);
    for (int p : parts)
      if (p <= 0 || p % 2 == 0) throw qsrank::ParseError("class parts must be odd positive integers");
    qsrank::OddPartition cls = qsrank::OddPartition::from_unsorted(std::move(parts));
    *out = dup_string(qsrank::character(lam, cls).get_str());
  });
}

qsr_status qsr_tableaux(const char* shape, const char* type, char** listing, size_t* count) {
  QSR_REQUIRE(shape);
  QSR_REQUIRE(type);
  QSR_REQUIRE(listing);
  *listing = nullptr;
  return guarded([&] {
    qsrank::SkewShape s = qsrank::parse_shape(shape);
    std::vector<int> sizes = qsrank::parse_parts(type);
    auto tableaux = qsrank::enumerate_tableaux(s.outer, s.inner, sizes);
    std::string text;
    mpz_class total = 0;
    for (std::size_t i = 0; i < tableaux.size(); ++i) {
      mpz_class w = qsrank::tableau_weight(tableaux[i]);
      total += w;
      text += "T" + std::to_string(i + 1) + "  weight " + w.get_str() + "\n";
      text += qsrank::format_filling(qsrank::render_filling(tableaux[i]));
    }
    text += std::to_string(tableaux.size()) + " tableaux, total weight " + total.get_str() + "\n";
    *listing = dup_string(text);
    if (count) *count = tableaux.size();
  });
}

qsr_status qsr_verify(qsr_sweep sweep, int max_n, char** report, int* violations) {
  QSR_REQUIRE(report);
  QSR_REQUIRE(violations);
  *report = nullptr;
  return guarded([&] {
    qsrank::SweepResult r;
    switch (sweep) {
      case QSR_SWEEP_CONJECTURE:
        r = qsrank::verify_conjecture(max_n);
        break;
      case QSR_SWEEP_SKEW:
        r = qsrank::verify_skew(max_n);
        break;
      default:
        throw qsrank::InvalidArgument("unknown sweep");
    }
    *report = dup_string(r.report);
    *violations = r.violations;
  });
}

}  // extern "C"
