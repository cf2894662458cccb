#include "assocloc/assocloc.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "assocloc/commands.hpp"
#include "assocloc/error.hpp"
#include "assocloc/io.hpp"

struct assocloc_algebra {
  assocloc::Algebra a;
  std::string text;
};
struct assocloc_module {
  assocloc::ModuleRep m;
};
struct assocloc_lfr {
  assocloc::LocalFunctionRing l;
};
struct assocloc_report {
  std::string text;
  int exit_code = 0;
};

namespace {

thread_local std::string last_error;

assocloc_status to_status(assocloc::ErrorCode c) {
  return static_cast<assocloc_status>(static_cast<int>(c) + 1);
}

template <typename Fn>
assocloc_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const assocloc::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ASSOCLOC_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ASSOCLOC_E_INTERNAL;
  }
}

assocloc_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return ASSOCLOC_E_NULL_ARGUMENT;
}

assocloc::MeataxeOptions meataxe(const assocloc_options* opts) {
  assocloc::MeataxeOptions m;
  if (opts) m.seed = opts->seed;
  return m;
}

assocloc_algebra* wrap(assocloc::Algebra a) {
  return new assocloc_algebra{a, assocloc::serialize_algebra(a)};
}

}  // namespace

extern "C" {

const char* assocloc_version(void) { return "0.1.0"; }

void assocloc_options_init(assocloc_options* opts) {
  if (!opts) return;
  opts->seed = 1;
  opts->cap = assocloc::kDefaultCap;
}

const char* assocloc_status_name(assocloc_status status) {
  switch (status) {
    case ASSOCLOC_OK: return "Ok";
    case ASSOCLOC_E_NULL_ARGUMENT: return "NullArgument";
    case ASSOCLOC_E_UNKNOWN_COMMAND: return "UnknownCommand";
    case ASSOCLOC_E_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(assocloc::ErrorCode::InvalidArgument))
    return assocloc::error_code_name(static_cast<assocloc::ErrorCode>(code)).data();
  return "Unknown";
}

const char* assocloc_last_error(void) { return last_error.c_str(); }

assocloc_status assocloc_algebra_load(const char* path, assocloc_algebra** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = wrap(assocloc::load_algebra(path));
    return ASSOCLOC_OK;
  });
}

assocloc_status assocloc_algebra_parse(const char* text, assocloc_algebra** out) {
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = wrap(assocloc::read_algebra(text));
    return ASSOCLOC_OK;
  });
}

void assocloc_algebra_free(assocloc_algebra* a) { delete a; }
size_t assocloc_algebra_dim(const assocloc_algebra* a) { return a ? a->a.dim() : 0; }
uint32_t assocloc_algebra_prime(const assocloc_algebra* a) { return a ? a->a.field().p() : 0; }
int assocloc_algebra_is_commutative(const assocloc_algebra* a) {
  return a && assocloc::is_commutative(a->a) ? 1 : 0;
}
const char* assocloc_algebra_text(const assocloc_algebra* a) { return a ? a->text.c_str() : ""; }

assocloc_status assocloc_module_load(const char* path, const assocloc_algebra* a,
                                     assocloc_module** out) {
  if (!path) return null_arg("path");
  if (!a) return null_arg("algebra");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new assocloc_module{assocloc::load_module(path, a->a)};
    return ASSOCLOC_OK;
  });
}

assocloc_status assocloc_module_parse(const char* text, const assocloc_algebra* a,
                                      assocloc_module** out) {
  if (!text) return null_arg("text");
  if (!a) return null_arg("algebra");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new assocloc_module{assocloc::read_module(text, a->a)};
    return ASSOCLOC_OK;
  });
}

void assocloc_module_free(assocloc_module* m) { delete m; }
size_t assocloc_module_dim(const assocloc_module* m) { return m ? m->m.dim : 0; }

assocloc_status assocloc_module_is_simple(const assocloc_module* m, const assocloc_options* opts,
                                          int* simple) {
  if (!m) return null_arg("module");
  if (!simple) return null_arg("simple");
  return guarded([&] {
    *simple = assocloc::is_simple(m->m, meataxe(opts)).simple ? 1 : 0;
    return ASSOCLOC_OK;
  });
}

assocloc_status assocloc_simples(const assocloc_algebra* a, const assocloc_options* opts,
                                 assocloc_module*** out, size_t* count) {
  if (!a) return null_arg("algebra");
  if (!out || !count) return null_arg("out");
  return guarded([&] {
    const auto ss = assocloc::simples(a->a, meataxe(opts));
    auto** arr = new assocloc_module*[ss.size()];
    for (std::size_t i = 0; i < ss.size(); ++i) arr[i] = new assocloc_module{ss[i]};
    *out = arr;
    *count = ss.size();
    return ASSOCLOC_OK;
  });
}

void assocloc_module_array_free(assocloc_module** ms, size_t count) {
  if (!ms) return;
  for (size_t i = 0; i < count; ++i) delete ms[i];
  delete[] ms;
}

assocloc_status assocloc_localize(const assocloc_algebra* a, const assocloc_module* const* summands,
                                  size_t count, const assocloc_options* opts, assocloc_lfr** out) {
  if (!a) return null_arg("algebra");
  if (!summands && count > 0) return null_arg("summands");
  if (!out) return null_arg("out");
  return guarded([&] {
    std::vector<assocloc::ModuleRep> ms;
    for (size_t i = 0; i < count; ++i) {
      if (!summands[i]) return null_arg("summand");
      ms.push_back(summands[i]->m);
    }
    assocloc::LocalizeOptions lo;
    lo.meataxe = meataxe(opts);
    if (opts) lo.cap = opts->cap;
    *out = new assocloc_lfr{assocloc::localize(a->a, ms, lo)};
    return ASSOCLOC_OK;
  });
}

void assocloc_lfr_free(assocloc_lfr* l) { delete l; }
size_t assocloc_lfr_dim(const assocloc_lfr* l) { return l ? l->l.dim() : 0; }
size_t assocloc_lfr_rank_eta(const assocloc_lfr* l) { return l ? l->l.rank_eta() : 0; }
size_t assocloc_lfr_kernel_dim(const assocloc_lfr* l) { return l ? l->l.kernel.dim() : 0; }
size_t assocloc_lfr_division_dim(const assocloc_lfr* l) {
  return l ? l->l.division.basis.dim() : 0;
}

assocloc_status assocloc_run(const char* command, const char* const* paths, size_t count,
                             const assocloc_options* opts, assocloc_report** out) {
  if (!command) return null_arg("command");
  if (!paths && count > 0) return null_arg("paths");
  if (!out) return null_arg("out");
  if (!assocloc::is_known_command(command)) {
    last_error = std::string("unknown command '") + command + "'";
    return ASSOCLOC_E_UNKNOWN_COMMAND;
  }
  return guarded([&] {
    std::vector<std::string> ps;
    for (size_t i = 0; i < count; ++i) {
      if (!paths[i]) return null_arg("path");
      ps.emplace_back(paths[i]);
    }
    assocloc::CommandOptions co;
    if (opts) {
      co.seed = opts->seed;
      co.cap = opts->cap;
    }
    const assocloc::Report r = assocloc::run_command(command, ps, co);
    *out = new assocloc_report{r.text(), r.exit_code()};
    return ASSOCLOC_OK;
  });
}

void assocloc_report_free(assocloc_report* r) { delete r; }
const char* assocloc_report_text(const assocloc_report* r) { return r ? r->text.c_str() : ""; }
int assocloc_report_exit_code(const assocloc_report* r) { return r ? r->exit_code : 2; }

size_t assocloc_command_count(void) { return assocloc::command_names().size(); }
const char* assocloc_command_name(size_t i) {
  const auto& n = assocloc::command_names();
  return i < n.size() ? n[i].c_str() : nullptr;
}

}  // extern "C"
