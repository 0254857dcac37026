#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mg/analytics.hpp"
#include "mg/generator.hpp"

namespace fs = std::filesystem;

namespace {

mg::Scheme scheme_by_name(const std::string& name, const mg::Lexicon& lex) {
  if (name == "faithful") return mg::make_faithful_scheme(lex);
  if (name == "arithmetic") return mg::make_arithmetic_scheme();
  if (name == "fractal") return mg::make_fractal_scheme();
  throw mg::Error("unknown scheme: " + name);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw mg::IOError("cannot write " + path.string());
  out << content;
}

int run_derive(const std::string& lexicon_path, const std::string& out_dir,
               const std::string& format) {
  mg::Lexicon lex = mg::load_lexicon(lexicon_path);
  mg::DerivationTrace trace = mg::derive(lex);
  std::string text = format == "json" ? mg::render_json(trace) : mg::render(trace);
  write_file(fs::path(out_dir) / ("trace." + std::string(format == "json" ? "json" : "txt")),
             text);
  std::cout << text;
  return trace.status == mg::DerivationTrace::Status::Success ? 0 : 1;
}

int run_represent(const std::string& lexicon_path, const std::string& out_dir,
                  const std::string& scheme_name) {
  mg::Lexicon lex = mg::load_lexicon(lexicon_path);
  mg::Scheme scheme = scheme_by_name(scheme_name, lex);
  mg::DerivationTrace trace = mg::derive(lex);
  write_file(fs::path(out_dir) / "scheme.txt", mg::scheme_manifest(scheme));

  if (scheme.kind() == mg::SchemeKind::Faithful) {
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
      mg::FockVector v = mg::represent_state(trace.states[k], scheme);
      write_file(fs::path(out_dir) / ("state_" + std::to_string(k + 1) + ".txt"),
                 mg::render(v));
    }
  } else {
    std::size_t target = mg::embedding_factor_target(trace.states, scheme);
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
      mg::DenseVector v =
          mg::densify(mg::represent_state(trace.states[k], scheme), scheme, target);
      std::ostringstream csv;
      csv << "index,value\n" << std::setprecision(17);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0.0) csv << i << "," << v[i] << "\n";
      write_file(fs::path(out_dir) / ("state_" + std::to_string(k + 1) + ".csv"), csv.str());
    }
    std::cout << "embedding dimension: "
              << scheme.filler_dim() * std::pow(3.0, static_cast<double>(target)) << "\n";
  }
  return trace.status == mg::DerivationTrace::Status::Success ? 0 : 1;
}

int run_harmony(const std::string& lexicon_path, const std::string& out_dir,
                const std::string& scheme_name) {
  mg::Lexicon lex = mg::load_lexicon(lexicon_path);
  mg::Scheme scheme = scheme_by_name(scheme_name, lex);
  mg::DerivationTrace trace = mg::derive(lex);
  if (trace.status != mg::DerivationTrace::Status::Success) {
    std::cerr << "derivation is stuck; no harmony series\n";
    return 1;
  }
  mg::HarmonySeries series = mg::harmony_series(trace, scheme);
  write_file(fs::path(out_dir) / "harmony.csv", mg::harmony_csv(series));

  std::ostringstream deltas;
  deltas << "step,op,trigger,delta_h\n" << std::setprecision(17);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const mg::DerivationStep& s = trace.steps[k];
    deltas << (k + 1) << ","
           << (s.op == mg::DerivationStep::Op::Merge ? "merge" : "move") << ","
           << mg::to_string(s.trigger) << ","
           << (series.values[k + 1] - series.values[k]) << "\n";
  }
  write_file(fs::path(out_dir) / "harmony_deltas.csv", deltas.str());
  std::cout << mg::harmony_csv(series);
  return 0;
}

int run_hmg(const std::string& lexicon_path, const std::string& out_dir,
            const std::string& scheme_name) {
  mg::Lexicon lex = mg::load_lexicon(lexicon_path);
  mg::Scheme scheme = scheme_by_name(scheme_name, lex);
  mg::DerivationTrace trace = mg::derive(lex);
  if (trace.status != mg::DerivationTrace::Status::Success) {
    std::cerr << "derivation is stuck; no HMG\n";
    return 1;
  }
  mg::HarmonySeries series = mg::harmony_series(trace, scheme);
  mg::WeightedLexicon W = mg::extract_hmg(trace, series, lex);
  std::string text = mg::render_weighted_lexicon(W);
  write_file(fs::path(out_dir) / "hmg.lex", text);
  std::cout << text;
  return 0;
}

int run_pca(const std::string& lexicon_path, const std::string& out_dir,
            const std::string& scheme_name) {
  mg::Lexicon lex = mg::load_lexicon(lexicon_path);
  mg::Scheme scheme = scheme_by_name(scheme_name, lex);
  mg::DerivationTrace trace = mg::derive(lex);
  if (trace.status != mg::DerivationTrace::Status::Success) {
    std::cerr << "derivation is stuck; no phase portrait\n";
    return 1;
  }
  mg::TraceMatrix M = mg::ztransform(mg::build_trace_matrix(trace, scheme));
  mg::PcaResult p = mg::pca(M, 2);
  mg::export_phase_portrait(p, (fs::path(out_dir) / "portrait").string());
  std::cout << mg::phase_portrait_csv(p);
  return 0;
}

bool report(const char* name, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
  return ok;
}

int run_verify(const std::string& lexicon_path) {
  mg::Lexicon lex =
      lexicon_path.empty() ? mg::InstanceGenerator(1).lexicon() : mg::load_lexicon(lexicon_path);
  mg::Scheme scheme = mg::make_faithful_scheme(lex);
  mg::InstanceGenerator gen(20240811);
  bool all = true;

  // homomorphism on the full derivation
  {
    mg::DerivationTrace trace = mg::derive(lex);
    bool ok = true;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
      const mg::DerivationStep& s = trace.steps[k];
      mg::StateDescription arranged = mg::permute(trace.states[k], s.pi);
      if (s.op == mg::DerivationStep::Op::Merge) {
        const mg::TreePtr& t1 = arranged[arranged.size() - 2];
        const mg::TreePtr& t2 = arranged[arranged.size() - 1];
        ok = ok && mg::bold_merge(mg::represent_tree(t1, scheme),
                                  mg::represent_tree(t2, scheme), scheme) ==
                       mg::represent_tree(mg::merge(t1, t2), scheme);
      } else {
        const mg::TreePtr& t = arranged.back();
        ok = ok && mg::bold_move(mg::represent_tree(t, scheme), scheme) ==
                       mg::represent_tree(mg::move(t), scheme);
      }
    }
    all &= report("merge/move homomorphism on the derivation", ok);
  }

  // randomized homomorphism instances
  {
    bool ok = true;
    for (int n = 0; n < 200; ++n) {
      auto inst = gen.random_merge_instance();
      ok = ok && mg::bold_merge(mg::represent_tree(inst.t1, scheme),
                                mg::represent_tree(inst.t2, scheme), scheme) ==
                     mg::represent_tree(mg::merge(inst.t1, inst.t2), scheme);
      mg::TreePtr t = gen.random_move_instance();
      ok = ok && mg::bold_move(mg::represent_tree(t, scheme), scheme) ==
                     mg::represent_tree(mg::move(t), scheme);
    }
    all &= report("200 randomized merge/move instances", ok);
  }

  // unbinding and discrimination
  {
    bool ok = true;
    for (int n = 0; n < 100; ++n) {
      mg::FeatureString s = gen.random_string(4);
      mg::FockVector u = mg::represent_string(s, scheme);
      for (std::size_t i = 1; i <= s.size(); ++i) {
        mg::FockVector want;
        want.add_term({}, scheme.filler(s.at(i)));
        ok = ok && mg::unbind(u, mg::string_pos(static_cast<int>(i)), scheme) == want;
      }
      mg::TreePtr t = gen.random_tree(4);
      bool simple = !mg::is_complex(t) && !t->leaf_label().empty();
      ok = ok && (mg::bold_first(mg::represent_tree(t, scheme), scheme).is_zero() != simple);
    }
    all &= report("unbinding lemma and simple/complex discrimination", ok);
  }

  // stack realizations
  {
    bool ok = true;
    for (int n = 0; n < 50; ++n) {
      mg::StateDescription w = gen.random_stack(5);
      mg::FockVector v = mg::represent_state(w, scheme);
      if (w.size() >= 2) {
        std::uniform_int_distribution<int> pos(1, static_cast<int>(w.size()));
        int i = pos(gen.rng()), j = pos(gen.rng());
        if (i != j) {
          std::vector<int> pi;
          for (int p = 1; p <= static_cast<int>(w.size()); ++p) pi.push_back(p);
          std::swap(pi[i - 1], pi[j - 1]);
          ok = ok && mg::bold_transpose(i, j, v, scheme) ==
                         mg::represent_state(mg::permute(w, pi), scheme);
        }
      }
    }
    all &= report("transposition realization vs permute", ok);
  }

  std::cout << (all ? "verify: all properties hold\n" : "verify: FAILURES\n");
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimalist grammars in Fock space: derivation, representation, harmony"};
  app.require_subcommand(1);

  std::string lexicon_path, out_dir = ".", scheme_name = "faithful", format = "text";
  double tolerance = 0.0;  // reserved for format-level rounding overrides

  auto add_common = [&](CLI::App* cmd, bool needs_scheme) {
    cmd->add_option("lexicon", lexicon_path, "lexicon file")->required();
    cmd->add_option("--out", out_dir, "output directory");
    cmd->add_option("--tolerance", tolerance, "tolerance override for reports");
    if (needs_scheme)
      cmd->add_option("--scheme", scheme_name, "faithful | arithmetic | fractal");
  };

  CLI::App* derive = app.add_subcommand("derive", "run the bottom-up processor");
  add_common(derive, false);
  derive->add_option("--trace-format", format, "text | json");

  CLI::App* represent = app.add_subcommand("represent", "state vectors per derivation step");
  add_common(represent, true);

  CLI::App* harmony = app.add_subcommand("harmony", "harmony series and step deltas");
  add_common(harmony, true);

  CLI::App* hmg = app.add_subcommand("hmg", "extract a harmonic lexicon");
  add_common(hmg, true);

  CLI::App* pca = app.add_subcommand("pca", "phase portrait of the derivation");
  add_common(pca, true);

  CLI::App* verify = app.add_subcommand("verify", "run the representation property suite");
  verify->add_option("lexicon", lexicon_path, "lexicon file (defaults to the built-in one)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (!out_dir.empty()) fs::create_directories(out_dir);
    if (derive->parsed()) return run_derive(lexicon_path, out_dir, format);
    if (represent->parsed()) return run_represent(lexicon_path, out_dir, scheme_name);
    if (harmony->parsed()) return run_harmony(lexicon_path, out_dir, scheme_name);
    if (hmg->parsed()) return run_hmg(lexicon_path, out_dir, scheme_name);
    if (pca->parsed()) return run_pca(lexicon_path, out_dir, scheme_name);
    if (verify->parsed()) return run_verify(lexicon_path);
  } catch (const mg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
