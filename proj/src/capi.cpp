#include "kummerlab/kummerlab.h"

#include <cstdlib>
#include <cstring>
#include <functional>

#include "kummerlab/report.hpp"

struct kl_curve {
  kummerlab::CurveRecord record;
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

std::string fmt(const char* f) { return f ? f : "json"; }

// Runs fn, renders its report, and maps exceptions onto status codes.
kl_status guarded(char** out, const std::function<kl_status(std::string&)>& fn) {
  if (!out) return KL_INPUT_ERROR;
  *out = nullptr;
  std::string text;
  kl_status s;
  try {
    s = fn(text);
  } catch (const kummerlab::InputError& e) {
    text = e.what();
    s = KL_INPUT_ERROR;
  } catch (const std::invalid_argument& e) {
    text = e.what();
    s = KL_INPUT_ERROR;
  } catch (const std::exception& e) {
    text = std::string("internal error: ") + e.what();
    s = KL_INTERNAL_ERROR;
  } catch (...) {
    text = "internal error";
    s = KL_INTERNAL_ERROR;
  }
  *out = dup(text);
  return s;
}

kl_status emit(const kummerlab::Report& r, const char* format, std::string& text) {
  text = r.render(fmt(format));
  return r.pass ? KL_OK : KL_NEGATIVE;
}

kummerlab::PrimeSelector selector(int i) {
  kummerlab::PrimeSelector s;
  if (i >= 0) s.index = i;
  return s;
}

kl_status need(const kl_curve* c) {
  if (!c) throw kummerlab::InputError("null curve handle");
  return KL_OK;
}

kl_status make_curve(kl_curve** curve, char** error, const std::function<kummerlab::CurveRecord()>& fn) {
  if (error) *error = nullptr;
  if (!curve) return KL_INPUT_ERROR;
  *curve = nullptr;
  char* msg = nullptr;
  const kl_status s = guarded(&msg, [&](std::string&) {
    *curve = new kl_curve{fn()};
    return KL_OK;
  });
  if (s != KL_OK && error) *error = msg;
  else std::free(msg);
  return s;
}

}  // namespace

extern "C" {

const char* kl_status_name(kl_status s) {
  switch (s) {
    case KL_OK: return "ok";
    case KL_NEGATIVE: return "negative";
    case KL_INPUT_ERROR: return "input error";
    case KL_INTERNAL_ERROR: return "internal error";
  }
  return "unknown";
}

void kl_string_free(char* s) { std::free(s); }

kl_status kl_curve_load(const char* path, kl_curve** curve, char** error) {
  return make_curve(curve, error, [&] {
    if (!path) throw kummerlab::InputError("null path");
    return kummerlab::parse_curve_file(path);
  });
}

kl_status kl_curve_parse(const char* json_text, kl_curve** curve, char** error) {
  return make_curve(curve, error, [&] {
    if (!json_text) throw kummerlab::InputError("null JSON text");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
      throw kummerlab::InputError(std::string("malformed JSON: ") + e.what());
    }
    return kummerlab::parse_curve_json(doc);
  });
}

void kl_curve_free(kl_curve* curve) { delete curve; }

const char* kl_curve_id(const kl_curve* curve) { return curve ? curve->record.id.c_str() : ""; }

kl_status kl_invariants(const kl_curve* c, const char* format, char** out) {
  return guarded(out, [&](std::string& t) { need(c); return emit(kummerlab::invariants_report(c->record), format, t); });
}

kl_status kl_tate(const kl_curve* c, int prime_index, const char* format, char** out) {
  return guarded(out, [&](std::string& t) {
    need(c);
    return emit(kummerlab::tate_report(c->record, selector(prime_index)), format, t);
  });
}

kl_status kl_effmodel(const kl_curve* c, int prime_index, const char* format, char** out) {
  return guarded(out, [&](std::string& t) {
    need(c);
    return emit(kummerlab::effmodel_report(c->record, selector(prime_index)), format, t);
  });
}

kl_status kl_admissible(const kl_curve* c, const char* format, char** out) {
  return guarded(out, [&](std::string& t) { need(c); return emit(kummerlab::admissible_report(c->record), format, t); });
}

kl_status kl_pair(const kl_curve* a, const kl_curve* b, const char* format, char** out) {
  return guarded(out, [&](std::string& t) {
    need(a);
    need(b);
    return emit(kummerlab::pair_report(a->record, b->record), format, t);
  });
}

kl_status kl_checklist(const kl_curve* a, const kl_curve* b, const char* format, char** out) {
  return guarded(out, [&](std::string& t) {
    need(a);
    need(b);
    return emit(kummerlab::checklist_report(a->record, b->record), format, t);
  });
}

kl_status kl_predict(long p, const char* fiber, int n, int fix1, int fix2, const char* format, char** out) {
  return guarded(out, [&](std::string& t) {
    if (!fiber) throw kummerlab::InputError("null fiber type");
    std::optional<int> nn;
    std::optional<std::pair<int, int>> fix;
    if (n >= 0) nn = n;
    if (fix1 >= 0) {
      if (fix2 < 0) throw kummerlab::InputError("--fix needs two component counts");
      fix = std::make_pair(fix1, fix2);
    }
    return emit(kummerlab::predict_report(p, kummerlab::parse_fiber_type(fiber), nn, fix), format, t);
  });
}

kl_status kl_lattice(const char* graph, int fundamental_cycle, const char* trace, const char* format, char** out) {
  return guarded(out, [&](std::string& t) {
    std::optional<std::string> g, tr;
    if (graph) g = graph;
    if (trace) tr = trace;
    return emit(kummerlab::lattice_report(g, fundamental_cycle != 0, tr), format, t);
  });
}

kl_status kl_verify_paper(const char* corpus_dir, const char* filter, int threads, const char* format, char** out) {
  return guarded(out, [&](std::string& t) {
    kummerlab::VerifyOptions o;
    if (corpus_dir) o.corpus_dir = corpus_dir;
    if (filter) o.filter = filter;
    if (threads < 1) throw kummerlab::InputError("--threads must be at least 1");
    o.threads = threads;
    return emit(kummerlab::verify_paper(o), format, t);
  });
}

const char* kl_default_corpus_dir(void) {
  static const std::string dir = kummerlab::default_corpus_dir();
  return dir.c_str();
}

}  // extern "C"
