#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "algequiv/errors.hpp"
#include "algequiv/frame.hpp"
#include "algequiv/io.hpp"
#include "algequiv/normalize.hpp"
#include "algequiv/oracle.hpp"
#include "algequiv/separate.hpp"

namespace algequiv::cli {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const std::vector<RowTag>& tags) {
  Json out = Json::array();
  for (const RowTag& t : tags) out.push_back({{"trace", t.trace}, {"level", t.level}});
  return out;
}

Json to_json(const RoughInvariants& r) {
  Json out;
  out["k"] = r.k;
  out["rank"] = r.rank;
  if (r.signature) out["signature"] = {r.signature->positive, r.signature->negative, r.signature->zero};
  out["disc_class"] = r.disc_class.to_string();
  if (r.disc_class.is_rational()) out["disc_class_reduced"] = r.disc_class.reduced();
  return out;
}

// Like dump(2), but arrays of scalars stay on one line.
void write_json(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out << pad << Json(key).dump() << ": ";
      write_json(out, value, indent + 2);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << '}';
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << pad;
      write_json(out, j[i], indent + 2);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << std::string(static_cast<std::size_t>(indent), ' ') << ']';
    return;
  }
  if (j.is_array()) {
    out << '[';
    for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
    out << ']';
    return;
  }
  out << j.dump();
}

void print(std::ostream& out, const Json& j) {
  write_json(out, j, 0);
  out << '\n';
}

std::size_t kmax_for(const Msc& a, std::optional<std::size_t> flag) { return flag.value_or(default_kmax(a.dim())); }

void require_compatible(const Msc& a, const Msc& b) {
  if (a.dim() != b.dim()) throw ParseError("algebras have different dimensions");
  if (a.field() != b.field()) throw ParseError("algebras are over different fields");
}

int out_of_scope(std::ostream& out, const std::string& reason, const std::string& detail) {
  print(out, Json{{"status", "OutOfScope"}, {"reason", reason}, {"detail", detail}});
  return kOutOfScope;
}

int cmd_invariants(const std::string& file, std::optional<std::size_t> kmax, std::ostream& out) {
  const Msc a = read_algebra_file(file);
  try {
    const Analysis an = analyze(a, kmax_for(a, kmax));
    Json j;
    j["status"] = "ok";
    j["dim"] = a.dim();
    j["field"] = a.field().to_string();
    j["provenance"] = to_json(an.frame.provenance);
    j["Q"] = to_json(an.normalized.q);
    j["D"] = to_json(an.normalized.d);
    j["P"] = to_json(an.frame.p);
    j["J1"] = to_json(an.invariants.j1.matrix());
    j["J2"] = to_json(an.invariants.j2);
    print(out, j);
    return kSuccess;
  } catch (const NotInV0& e) {
    return out_of_scope(out, "NotInV0", e.what());
  } catch (const FrameDeficient& e) {
    return out_of_scope(out, "FrameDeficient", e.what());
  }
}

int cmd_compare(const std::string& fa, const std::string& fb, std::optional<std::size_t> kmax, std::ostream& out) {
  const Msc a = read_algebra_file(fa);
  const Msc b = read_algebra_file(fb);
  require_compatible(a, b);
  const Verdict v = compare(a, b, kmax_for(a, kmax));
  if (const auto* eq = std::get_if<Equivalent>(&v)) {
    const Msc image = act(eq->witness, a);
    print(out, Json{{"verdict", "Equivalent"},
                    {"witness", to_json(eq->witness)},
                    {"act(g,A)", to_json(image.matrix())},
                    {"verified", image == b}});
    return kSuccess;
  }
  if (const auto* ne = std::get_if<NotEquivalent>(&v)) {
    print(out, Json{{"verdict", "NotEquivalent"},
                    {"invariant", ne->invariant},
                    {"row", ne->row},
                    {"col", ne->col},
                    {"A", ne->a_value.to_string()},
                    {"B", ne->b_value.to_string()}});
    return kNotEquivalent;
  }
  const auto& oos = std::get<OutOfScope>(v);
  print(out, Json{{"verdict", "OutOfScope"},
                  {"reason", to_string(oos.reason)},
                  {"side", oos.side},
                  {"detail", oos.detail}});
  return kOutOfScope;
}

int cmd_rough(const std::string& fa, const std::optional<std::string>& fb, std::size_t k, std::ostream& out) {
  if (k == 0) throw ParseError("--k must be at least 1");
  const Msc a = read_algebra_file(fa);
  Json levels = Json::array();
  for (std::size_t level = 1; level <= k; ++level) levels.push_back(to_json(rough_invariants(a, level)));
  Json j{{"A", levels}};
  int code = kSuccess;
  if (fb) {
    const Msc b = read_algebra_file(*fb);
    require_compatible(a, b);
    Json lb = Json::array();
    for (std::size_t level = 1; level <= k; ++level) lb.push_back(to_json(rough_invariants(b, level)));
    j["B"] = lb;
    const RoughVerdict rv = rough_compare(a, b, k);
    const bool distinct = rv == RoughVerdict::DefinitelyNotEquivalent;
    j["verdict"] = distinct ? "DefinitelyNotEquivalent" : "PossiblyEquivalent";
    if (distinct) code = kNotEquivalent;
  }
  print(out, j);
  return code;
}

int cmd_normalize(const std::string& file, std::ostream& out) {
  const Msc a = read_algebra_file(file);
  try {
    const NormalizedAlgebra n = normalize(a);
    print(out, Json{{"status", "ok"}, {"Q", to_json(n.q)}, {"D", to_json(n.d)}, {"Abar", to_json(n.abar.matrix())}});
    return kSuccess;
  } catch (const NotInV0& e) {
    return out_of_scope(out, "NotInV0", e.what());
  }
}

int cmd_brute(const std::string& fa, const std::string& fb, std::uint64_t cap, std::ostream& out) {
  const Msc a = read_algebra_file(fa);
  const Msc b = read_algebra_file(fb);
  require_compatible(a, b);
  if (!a.field().is_prime()) throw ParseError("brute-compare needs a prime field");
  if (const auto g = brute_force_equivalent(a, b, cap)) {
    print(out, Json{{"verdict", "Equivalent"}, {"witness", to_json(*g)}});
    return kSuccess;
  }
  print(out, Json{{"verdict", "NotEquivalent"}});
  return kNotEquivalent;
}

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(output, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + output + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence of finite-dimensional algebras via separating rational invariants"};
  app.name("algequiv");
  app.require_subcommand(1);

  std::string file_a;
  std::string file_b;
  std::optional<std::string> file_b_opt;
  std::optional<std::size_t> kmax;
  std::size_t k = 1;
  std::uint64_t cap = kDefaultGlCap;
  std::size_t dim = 2;
  std::string field = "rational";
  std::uint64_t seed = 0;
  long long bound = 5;
  std::string output;
  std::function<int()> action;

  auto* inv = app.add_subcommand("invariants", "Separating invariants J1, J2 of an algebra");
  inv->add_option("file", file_a, "Algebra file")->required();
  inv->add_option("--kmax", kmax, "Frame search depth (default 3 for m=2, 2 for m>=3)");
  inv->callback([&] { action = [&] { return cmd_invariants(file_a, kmax, out); }; });

  auto* cmp = app.add_subcommand("compare", "Decide equivalence, with a verified witness");
  cmp->add_option("a", file_a, "First algebra file")->required();
  cmp->add_option("b", file_b, "Second algebra file")->required();
  cmp->add_option("--kmax", kmax, "Frame search depth (default 3 for m=2, 2 for m>=3)");
  cmp->callback([&] { action = [&] { return cmd_compare(file_a, file_b, kmax, out); }; });

  auto* rough = app.add_subcommand("rough", "Trace-form invariants (rank, signature, discriminant class)");
  rough->add_option("a", file_a, "Algebra file")->required();
  rough->add_option("b", file_b_opt, "Optional second algebra to compare against");
  rough->add_option("--k", k, "Highest trace-form level")->capture_default_str();
  rough->callback([&] { action = [&] { return cmd_rough(file_a, file_b_opt, k, out); }; });

  auto* norm = app.add_subcommand("normalize", "Print Q, D and the normalized structure constants");
  norm->add_option("file", file_a, "Algebra file")->required();
  norm->callback([&] { action = [&] { return cmd_normalize(file_a, out); }; });

  auto* brute = app.add_subcommand("brute-compare", "Exhaustive GL(m,p) search for an isomorphism");
  brute->add_option("a", file_a, "First algebra file")->required();
  brute->add_option("b", file_b, "Second algebra file")->required();
  brute->add_option("--cap", cap, "Largest |GL(m,p)| to enumerate")->capture_default_str();
  brute->callback([&] { action = [&] { return cmd_brute(file_a, file_b, cap, out); }; });

  auto* gen = app.add_subcommand("gen-random", "Write a random algebra file");
  gen->add_option("--dim", dim, "Dimension m")->capture_default_str();
  gen->add_option("--field", field, "'rational' or 'prime:<p>'")->capture_default_str();
  gen->add_option("--seed", seed, "RNG seed")->capture_default_str();
  gen->add_option("--bound", bound, "Max |entry| over the rationals")->capture_default_str();
  gen->add_option("-o,--output", output, "Output path (default stdout)");
  gen->callback([&] {
    action = [&] {
      if (dim == 0) throw ParseError("--dim must be positive");
      emit(format_algebra(random_algebra(dim, parse_field_flag(field), RngSpec{seed, bound})), output, out);
      return static_cast<int>(kSuccess);
    };
  });

  auto* tf = app.add_subcommand("transform", "Write act(g, A) for a random nonsingular g");
  tf->add_option("file", file_a, "Algebra file")->required();
  tf->add_option("--seed", seed, "RNG seed")->capture_default_str();
  tf->add_option("--bound", bound, "Max |entry| of g over the rationals")->capture_default_str();
  tf->add_option("-o,--output", output, "Output path (default stdout)");
  tf->callback([&] {
    action = [&] {
      const Msc a = read_algebra_file(file_a);
      const Mat g = random_gl(a.dim(), a.field(), RngSpec{seed, std::max(bound, 1LL)});
      emit(format_algebra(act(g, a)), output, out);
      return static_cast<int>(kSuccess);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  try {
    return action();
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvalidField& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace algequiv::cli
