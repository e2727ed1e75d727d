#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include <qsrank/qsrank.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct PolyDeleter {
  void operator()(qsr_poly* p) const { qsr_poly_free(p); }
};
using PolyPtr = std::unique_ptr<qsr_poly, PolyDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qsr_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

class CallFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(qsr_status status) {
  if (status != QSR_OK) throw CallFailed(std::string(qsr_status_name(status)) + ": " + qsr_last_error());
}

qsr_route route_from_name(const std::string& name) {
  if (name.empty()) return QSR_ROUTE_DEFAULT;
  if (name == "morris") return QSR_ROUTE_MORRIS;
  if (name == "recur") return QSR_ROUTE_RECUR;
  if (name == "pf") return QSR_ROUTE_PF;
  if (name == "strips") return QSR_ROUTE_STRIPS;
  throw CallFailed("unknown route: " + name);
}

std::string pick_shape(const std::string& shape, const std::string& skew) {
  if (shape.empty() == skew.empty()) throw CallFailed("give the shape either positionally or with --skew");
  return shape.empty() ? skew : shape;
}

int run_qfun(const std::string& shape, const std::string& route, const std::string& skew, bool json) {
  qsr_poly* raw = nullptr;
  check(qsr_qfun(pick_shape(shape, skew).c_str(), route_from_name(route), &raw));
  PolyPtr poly(raw);
  char* text = nullptr;
  check(json ? qsr_poly_json(poly.get(), &text) : qsr_poly_text(poly.get(), &text));
  OwnedString out(text);
  std::cout << out.get() << "\n";
  return kExitOk;
}

int run_srank(const std::string& shape, bool witness, bool verify, int bound) {
  int value = 0;
  check(qsr_srank(shape.c_str(), &value));
  std::cout << value << "\n";
  if (!witness && !verify) return kExitOk;

  int brute = 0;
  char* drawing = nullptr;
  check(qsr_srank_bruteforce(shape.c_str(), bound, &brute, witness ? &drawing : nullptr));
  OwnedString owned(drawing);
  if (witness) std::cout << owned.get();
  if (verify) {
    if (brute != value) {
      std::cout << "check FAILED: exhaustive minimum is " << brute << "\n";
      return kExitViolation;
    }
    std::cout << "check ok: exhaustive minimum is " << brute << "\n";
  }
  return kExitOk;
}

int run_character(const std::string& lam, const std::string& pi) {
  char* raw = nullptr;
  check(qsr_character(lam.c_str(), pi.c_str(), &raw));
  OwnedString out(raw);
  std::cout << out.get() << "\n";
  return kExitOk;
}

int run_tableaux(const std::string& shape, const std::string& type) {
  char* raw = nullptr;
  check(qsr_tableaux(shape.c_str(), type.c_str(), &raw, nullptr));
  OwnedString out(raw);
  std::cout << out.get();
  return kExitOk;
}

int run_verify(const std::string& kind, int max_n) {
  qsr_sweep sweep = kind == "conjecture" ? QSR_SWEEP_CONJECTURE : QSR_SWEEP_SKEW;
  char* raw = nullptr;
  int violations = 0;
  check(qsr_verify(sweep, max_n, &raw, &violations));
  OwnedString out(raw);
  std::cout << out.get();
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur Q-functions in the power-sum basis, and sranks of shifted shapes"};
  app.require_subcommand(1, 1);

  std::string shape, route, skew, pi, kind;
  bool json = false, witness = false, verify_flag = false;
  int max_n = 0;
  int bound = 12;

  auto* qfun = app.add_subcommand("qfun", "Print Q_lambda or Q_{lambda/mu} in power sums");
  qfun->add_option("shape", shape, "lambda or lambda/mu, e.g. 4,3/3");
  qfun->add_option("--route", route, "morris | recur | pf | strips")
      ->check(CLI::IsMember({"morris", "recur", "pf", "strips"}));
  qfun->add_option("--skew", skew, "skew shape lambda/mu");
  qfun->add_flag("--json", json, "machine-readable output");

  auto* srank = app.add_subcommand("srank", "Print the srank of a shifted shape");
  srank->add_option("shape", shape, "lambda or lambda/mu")->required();
  srank->add_flag("--witness", witness, "draw a bar tableau with the minimum number of bars");
  srank->add_flag("--check", verify_flag, "compare against an exhaustive search");
  srank->add_option("--bound", bound, "largest |lambda| for the exhaustive search")
      ->capture_default_str()
      ->check(CLI::Range(1, 40));

  auto* character = app.add_subcommand("character", "Print the spin character value <lambda>(pi)");
  character->add_option("lambda", shape, "strict partition")->required();
  character->add_option("pi", pi, "odd parts, any order")->required();

  auto* tableaux = app.add_subcommand("tableaux", "List bar tableaux of given type with weights");
  tableaux->add_option("shape", shape, "lambda or lambda/mu")->required();
  tableaux->add_option("type", pi, "bar sizes in label order")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->add_option("kind", kind, "conjecture | skew")
      ->required()
      ->check(CLI::IsMember({"conjecture", "skew"}));
  verify->add_option("--max-n", max_n, "largest |lambda|")->required()->check(CLI::Range(1, 40));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*qfun) return run_qfun(shape, route, skew, json);
    if (*srank) return run_srank(shape, witness, verify_flag, bound);
    if (*character) return run_character(shape, pi);
    if (*tableaux) return run_tableaux(shape, pi);
    if (*verify) return run_verify(kind, max_n);
  } catch (const CallFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
