// Copyright 2026 The tslx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "commands.hpp"

#include <iostream>
#include <memory>

#include <nlohmann/json.hpp>

#include "inputs.hpp"
#include "manifest.hpp"
#include "tslx/align.hpp"
#include "tslx/attention.hpp"
#include "tslx/error.hpp"
#include "tslx/features.hpp"
#include "tslx/io.hpp"
#include "tslx/perturb.hpp"
#include "tslx/prototypes.hpp"
#include "tslx/smi.hpp"
#include "tslx/synthesis.hpp"

namespace tslx::cli {

namespace {

using Json = nlohmann::ordered_json;
using Path = std::filesystem::path;

void Print(const Json& j) { std::cout << j.dump(2) << "\n"; }

void PrintWarnings(const Warnings& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

Json MatrixRows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    rows.push_back(std::vector<double>(m.row(r).begin(), m.row(r).end()));
  }
  return rows;
}

TokenVocab LoadVocab(const Path& path, Warnings& warnings) {
  return ReadVocab(path, &warnings);
}

std::vector<std::string> LoadLabels(const std::optional<Path>& path) {
  if (!path) return {};
  return ReadLines(*path);
}

RunManifest NewManifest(const Context& ctx, const std::string& name) {
  RunManifest m(name, ctx.argv);
  m.SetThreads(ctx.threads);
  return m;
}

// ---------------------------------------------------------------- features

struct FeaturesOpts {
  Path patches;
  std::optional<Path> out;
};

void RunFeatures(const Context& ctx, const FeaturesOpts& o) {
  RunManifest manifest = NewManifest(ctx, "features");
  manifest.AddInput(o.patches);
  const FeatureTable t = ExtractFeatures(LoadInputMatrix(o.patches));
  Json j;
  j["n_patches"] = t.n_patches();
  j["m"] = t.m();
  j["names"] = t.names();
  if (o.out) {
    SaveOutputMatrix(*o.out, t.values, t.names());
    manifest.AddOutput(*o.out);
    j["out"] = o.out->string();
  } else {
    j["values"] = MatrixRows(t.values);
  }
  Print(j);
  manifest.Emit(ctx.manifest, o.out);
}

// ---------------------------------------------------------------- smi

struct SmiOpts {
  Path patches;
  Path groups;
  bool precomputed = false;
  double a = 0.5;
  double b = 0.1;
};

FeatureTable FeaturesOf(const Path& path, bool precomputed) {
  Matrix m = LoadInputMatrix(path);
  if (!precomputed) return ExtractFeatures(m);
  if (m.cols() != kFeatureCount) {
    Fail(ErrorCode::kInvalidData,
         path.string() + ": precomputed features need " +
             std::to_string(kFeatureCount) + " columns, got " +
             std::to_string(m.cols()));
  }
  return FeatureTable{std::move(m)};
}

Json ReportJson(const SmiReport& r, const std::vector<std::string>& names) {
  Json j;
  j["d_intra"] = r.d_intra;
  j["d_inter"] = r.d_inter;
  j["smi"] = r.smi;
  j["n_groups"] = r.n_groups;
  j["config"] = {{"a", r.config.a}, {"b", r.config.b}};
  j["feature_names"] = names;
  j["per_group"] = Json::array();
  for (const auto& g : r.per_group) {
    j["per_group"].push_back(
        {{"key", g.key}, {"size", g.size}, {"sigma", g.sigma}, {"mean", g.mean}});
  }
  j["warnings"] = r.warnings;
  return j;
}

void RunSmi(const Context& ctx, const SmiOpts& o) {
  RunManifest manifest = NewManifest(ctx, "smi");
  manifest.AddInput(o.patches);
  manifest.AddInput(o.groups);
  const FeatureTable t = FeaturesOf(o.patches, o.precomputed);
  const GroupAssignment ga = ReadGroupAssignment(o.groups, t.n_patches());
  const SmiReport r = ComputeSmiReport(t, ga.groups, ga.keys, {o.a, o.b});
  PrintWarnings(r.warnings);
  const Json j = ReportJson(r, t.names());
  Print(j);
  manifest.SetResult({{"smi", r.smi}, {"d_intra", r.d_intra}, {"d_inter", r.d_inter}});
  manifest.Emit(ctx.manifest, std::nullopt);
}

// ---------------------------------------------------------------- silhouette

struct SilhouetteOpts {
  Path patches;
  Path groups;
  bool precomputed = false;
  bool raw_features = false;
};

void RunSilhouette(const Context& ctx, const SilhouetteOpts& o) {
  RunManifest manifest = NewManifest(ctx, "silhouette");
  manifest.AddInput(o.patches);
  manifest.AddInput(o.groups);
  const FeatureTable t = FeaturesOf(o.patches, o.precomputed);
  const GroupAssignment ga = ReadGroupAssignment(o.groups, t.n_patches());
  std::vector<std::size_t> labels(t.n_patches());
  for (std::size_t g = 0; g < ga.groups.size(); ++g) {
    for (std::size_t p : ga.groups[g]) labels[p] = g;
  }
  const Matrix points = o.raw_features ? t.values : StandardizeColumns(t.values);
  const double s = Silhouette(points, labels);
  Print({{"silhouette", s},
         {"n_clusters", ga.groups.size()},
         {"representation", o.raw_features ? "features" : "standardized_features"}});
  manifest.SetResult({{"silhouette", s}});
  manifest.Emit(ctx.manifest, std::nullopt);
}

// ---------------------------------------------------------------- synth-validate

struct SynthOpts {
  std::uint64_t seed = 42;
  Path out;
  std::size_t groups = 5;
  std::size_t patches_per_group = 20;
  std::size_t length = 16;
};

Json LevelTable(double (*value)(Level)) {
  Json j;
  for (Level l : {Level::kZero, Level::kSmall, Level::kMedian, Level::kLarge}) {
    j[std::string(LevelName(l))] = value(l);
  }
  return j;
}

void RunSynth(const Context& ctx, const SynthOpts& o) {
  RunManifest manifest = NewManifest(ctx, "synth-validate");
  manifest.AddSeed("seed", o.seed);
  ScenarioSpec base;
  base.seed = o.seed;
  base.n_groups = o.groups;
  base.patches_per_group = o.patches_per_group;
  base.length = o.length;
  base.Validate();
  std::filesystem::create_directories(o.out);

  const auto specs = SweepSpecs(base);
  for (const auto& spec : specs) {
    const Scenario sc = GenerateScenario(spec);
    const Path dir = o.out / spec.Name();
    std::filesystem::create_directories(dir);
    WriteMatrix(dir / "patches.tslx", sc.patches);
    Groups groups = GroupsFromLabels(sc.labels);
    std::vector<std::string> keys;
    for (std::size_t g = 0; g < groups.size(); ++g) keys.push_back(std::to_string(g));
    WriteGroupAssignment(dir / "labels.csv", groups, keys);
    manifest.AddOutput(dir / "patches.tslx");
    manifest.AddOutput(dir / "labels.csv");
  }

  const auto rows = ValidationSweep(base);
  std::string csv = "scenario,intra,inter,sigma,delta,d_intra,d_inter,smi,silhouette\n";
  Json jrows = Json::array();
  for (const auto& r : rows) {
    csv += r.name + "," + std::string(LevelName(r.intra)) + "," +
           std::string(LevelName(r.inter)) + "," + FormatReal(IntraSigma(r.intra)) +
           "," + FormatReal(InterDelta(r.inter)) + "," + FormatReal(r.d_intra) + "," +
           FormatReal(r.d_inter) + "," + FormatReal(r.smi) + "," +
           FormatReal(r.silhouette) + "\n";
    jrows.push_back({{"scenario", r.name},
                     {"intra", LevelName(r.intra)},
                     {"inter", LevelName(r.inter)},
                     {"d_intra", r.d_intra},
                     {"d_inter", r.d_inter},
                     {"smi", r.smi},
                     {"silhouette", r.silhouette}});
  }
  WriteFileBytes(o.out / "sweep.csv", csv);
  manifest.AddOutput(o.out / "sweep.csv");

  Json j;
  j["seed"] = o.seed;
  j["generator"] = {{"n_groups", o.groups},
                    {"patches_per_group", o.patches_per_group},
                    {"length", o.length},
                    {"sigma", LevelTable(IntraSigma)},
                    {"delta", LevelTable(InterDelta)},
                    {"silhouette_representation", "standardized_features"}};
  j["rows"] = jrows;
  Print(j);
  manifest.SetResult(j["generator"]);
  manifest.Emit(ctx.manifest, o.out);
}

// ---------------------------------------------------------------- prototypes

struct PrototypesOpts {
  std::string method;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::optional<Path> vocab;
  std::optional<Path> embeddings;
  std::optional<std::string> words;
  std::optional<Path> input;
  std::size_t max_iter = 100;
  double tol = 1e-6;
  Path out;
};

void RunPrototypes(const Context& ctx, const PrototypesOpts& o) {
  RunManifest manifest = NewManifest(ctx, "prototypes");
  const bool text = o.method == "text" || o.method == "simexp";
  if (o.method != "linear" && !o.embeddings) {
    throw UsageError("--embeddings is required for --method " + o.method);
  }
  if (text && (!o.vocab || !o.words)) {
    throw UsageError("--vocab and --words are required for --method " + o.method);
  }
  if (o.method == "linear" && !o.input) {
    throw UsageError("--input is required for --method linear");
  }
  if (o.method != "linear" && o.method != "text" && o.k == 0) {
    throw UsageError("--k is required for --method " + o.method);
  }

  Warnings warnings;
  std::optional<Matrix> emb;
  if (o.embeddings) {
    manifest.AddInput(*o.embeddings);
    emb = LoadInputMatrix(*o.embeddings);
  }
  PrototypeSet set = [&] {
    if (o.method == "pca") return ExtractPca(*emb, o.k);
    if (o.method == "kmeans") {
      manifest.AddSeed("seed", o.seed);
      return ExtractKmeans(*emb, o.k, {o.seed, o.max_iter, o.tol});
    }
    if (o.method == "random") {
      manifest.AddSeed("seed", o.seed);
      return ExtractRandom(*emb, o.k, o.seed);
    }
    if (o.method == "linear") {
      manifest.AddInput(*o.input);
      PrototypeSet s = LoadLinear(*o.input);
      if (emb) s.CheckDimension(*emb);
      return s;
    }
    manifest.AddInput(*o.vocab);
    if (*o.words != "bundled") manifest.AddInput(*o.words);
    const TokenVocab vocab = LoadVocab(*o.vocab, warnings);
    const auto words = FlattenWords(LoadWords(*o.words));
    if (o.method == "text") return ExtractProvided(vocab, *emb, words);
    return ExtractSimilarityExpansion(vocab, *emb, words, o.k);
  }();
  for (const auto& w : set.unresolved) warnings.push_back("unresolved word '" + w + "'");
  PrintWarnings(warnings);

  WriteMatrix(o.out, set.prototypes);
  Path prov_path = o.out;
  prov_path.replace_extension(".provenance.json");
  Json prov;
  prov["method"] = PrototypeMethodName(set.method);
  prov["k"] = set.k();
  prov["dim"] = set.dim();
  prov["prototypes"] = Json::array();
  for (std::size_t i = 0; i < set.k(); ++i) {
    prov["prototypes"].push_back({{"index", i}, {"source", set.provenance[i]}});
  }
  if (!set.explained_variance.empty()) prov["explained_variance"] = set.explained_variance;
  prov["unresolved"] = set.unresolved;
  WriteFileBytes(prov_path, prov.dump(2) + "\n");
  manifest.AddOutput(o.out);
  manifest.AddOutput(prov_path);

  Json j = prov;
  j["out"] = o.out.string();
  j["provenance_file"] = prov_path.string();
  Print(j);
  manifest.Emit(ctx.manifest, o.out);
}

// ---------------------------------------------------------------- assign-tokens

struct AssignOpts {
  Path embeddings;
  Path vocab_embeddings;
  Path vocab;
  std::size_t k = 1;
  std::optional<Path> out;
};

std::string KeyString(const std::vector<std::size_t>& key) {
  std::string s;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(key[i]);
  }
  return s;
}

void RunAssign(const Context& ctx, const AssignOpts& o) {
  RunManifest manifest = NewManifest(ctx, "assign-tokens");
  manifest.AddInput(o.embeddings);
  manifest.AddInput(o.vocab_embeddings);
  manifest.AddInput(o.vocab);
  Warnings warnings;
  const Matrix emb = LoadInputMatrix(o.embeddings);
  const Matrix vocab_emb = LoadInputMatrix(o.vocab_embeddings);
  const TokenVocab vocab = LoadVocab(o.vocab, warnings);
  vocab.CheckPairing(vocab_emb);
  PrintWarnings(warnings);

  const auto nearest = NearestTokens(emb, vocab_emb, vocab, o.k, ctx.threads);
  std::vector<std::vector<std::size_t>> rankings;
  Json rows = Json::array();
  for (std::size_t r = 0; r < nearest.size(); ++r) {
    Json tokens = Json::array();
    std::vector<std::size_t> ranking;
    for (const auto& m : nearest[r]) {
      tokens.push_back({{"index", m.index}, {"token", m.token}, {"similarity", m.similarity}});
      ranking.push_back(m.index);
    }
    rankings.push_back(std::move(ranking));
    rows.push_back({{"row", r}, {"tokens", tokens}});
  }
  const TokenSetGrouping g = GroupByRankPrefix(rankings, o.k);
  Json groups = Json::array();
  std::vector<std::string> keys;
  for (std::size_t i = 0; i < g.keys.size(); ++i) {
    keys.push_back(KeyString(g.keys[i]));
    groups.push_back({{"key", keys.back()},
                      {"tokens", KeyTokens(g.keys[i], vocab)},
                      {"members", g.members[i]}});
  }
  if (o.out) {
    WriteGroupAssignment(*o.out, g.members, keys);
    manifest.AddOutput(*o.out);
  }
  Print({{"k", o.k},
         {"similarity", "cosine"},
         {"n_groups", g.members.size()},
         {"rows", rows},
         {"groups", groups}});
  manifest.Emit(ctx.manifest, o.out);
}

// ---------------------------------------------------------------- smi-sweep

struct SweepOpts {
  Path aligned;
  Path vocab_embeddings;
  Path vocab;
  Path patches;
  std::size_t k_max = 1;
  double a = 0.5;
  double b = 0.1;
  std::optional<Path> out;
};

void RunSweep(const Context& ctx, const SweepOpts& o) {
  RunManifest manifest = NewManifest(ctx, "smi-sweep");
  for (const auto& p : {o.aligned, o.vocab_embeddings, o.vocab, o.patches}) {
    manifest.AddInput(p);
  }
  Warnings warnings;
  const Matrix aligned = LoadInputMatrix(o.aligned);
  const Matrix vocab_emb = LoadInputMatrix(o.vocab_embeddings);
  const TokenVocab vocab = LoadVocab(o.vocab, warnings);
  const Matrix raw = LoadInputMatrix(o.patches);
  PrintWarnings(warnings);
  const SmiSweep s =
      SmiVsKSweep(aligned, vocab_emb, vocab, raw, o.k_max, {o.a, o.b}, ctx.threads);

  Json rows = Json::array();
  std::string csv = "k,n_groups,d_intra,d_inter,smi\n";
  for (const auto& r : s.rows) {
    rows.push_back({{"k", r.k},
                    {"n_groups", r.n_groups},
                    {"d_intra", r.d_intra},
                    {"d_inter", r.d_inter},
                    {"smi", r.smi}});
    csv += std::to_string(r.k) + "," + std::to_string(r.n_groups) + "," +
           FormatReal(r.d_intra) + "," + FormatReal(r.d_inter) + "," +
           FormatReal(r.smi) + "\n";
  }
  if (o.out) {
    WriteFileBytes(*o.out, csv);
    manifest.AddOutput(*o.out);
  }
  Json j;
  j["rows"] = rows;
  j["first_k_at_one"] = s.first_k_at_one ? Json(*s.first_k_at_one) : Json(nullptr);
  j["config"] = {{"a", o.a}, {"b", o.b}};
  Print(j);
  manifest.Emit(ctx.manifest, o.out);
}

// ---------------------------------------------------------------- similarity

struct SimilarityOpts {
  Path embeddings;
  Path vocab;
  Path vocab_embeddings;
  std::string words = "bundled";
  std::optional<Path> out;
};

void RunSimilarity(const Context& ctx, const SimilarityOpts& o) {
  RunManifest manifest = NewManifest(ctx, "similarity");
  manifest.AddInput(o.embeddings);
  manifest.AddInput(o.vocab);
  manifest.AddInput(o.vocab_embeddings);
  if (o.words != "bundled") manifest.AddInput(o.words);
  Warnings warnings;
  const Matrix emb = LoadInputMatrix(o.embeddings);
  const TokenVocab vocab = LoadVocab(o.vocab, warnings);
  const Matrix vocab_emb = LoadInputMatrix(o.vocab_embeddings);
  const auto s = ComputeSelectedWordsSimilarity(emb, vocab, vocab_emb, LoadWords(o.words));
  for (const auto& w : s.unresolved) warnings.push_back("unresolved word '" + w + "'");
  PrintWarnings(warnings);
  if (o.out) {
    SaveOutputMatrix(*o.out, s.heatmap, s.columns);
    manifest.AddOutput(*o.out);
  }
  Json j;
  j["similarity"] = "cosine";
  j["n_rows"] = s.heatmap.rows();
  j["n_columns"] = s.columns.size();
  j["group_names"] = s.group_names;
  j["group_means"] = MatrixRows(s.group_means);
  j["difference"] = s.difference;
  j["mean_difference"] = s.mean_difference;
  j["unresolved"] = s.unresolved;
  Print(j);
  manifest.Emit(ctx.manifest, o.out);
}

// ---------------------------------------------------------------- attention

struct AttentionOpts {
  Path attention;
  std::optional<Path> row_labels;
  std::optional<Path> col_labels;
  bool row_stochastic = false;
  std::size_t k = 5;
  std::optional<std::size_t> boundary;
  std::optional<Path> heatmap;
};

AttentionView LoadView(RunManifest& manifest, const AttentionOpts& o,
                       Warnings& warnings) {
  manifest.AddInput(o.attention);
  if (o.row_labels) manifest.AddInput(*o.row_labels);
  if (o.col_labels) manifest.AddInput(*o.col_labels);
  AttentionView v{LoadInputMatrix(o.attention), LoadLabels(o.row_labels),
                  LoadLabels(o.col_labels), o.boundary, o.row_stochastic};
  try {
    v.Validate(&warnings);
  } catch (const Error& e) {
    Fail(e.code(), o.attention.string() + ": " + e.what());
  }
  return v;
}

void RunAttnTop(const Context& ctx, const AttentionOpts& o) {
  RunManifest manifest = NewManifest(ctx, "attn-top");
  Warnings warnings;
  const AttentionView v = LoadView(manifest, o, warnings);
  PrintWarnings(warnings);
  const auto top = TopKAttended(v, o.k);
  const auto dom = ComputePrototypeDominance(v, o.k);
  Json rows = Json::array();
  for (std::size_t r = 0; r < top.size(); ++r) {
    Json entries = Json::array();
    for (const auto& e : top[r]) {
      entries.push_back({{"col", e.col}, {"label", e.label}, {"weight", e.weight}});
    }
    rows.push_back({{"row", r}, {"label", v.RowLabel(r)}, {"top", entries}});
  }
  if (o.heatmap) {
    ExportHeatmap(v, *o.heatmap);
    manifest.AddOutput(*o.heatmap);
  }
  Json j;
  j["k"] = o.k;
  j["rows"] = rows;
  j["dominance"] = {{"appearances", dom.appearances},
                    {"never_fraction", dom.never_fraction},
                    {"max_col", dom.max_col},
                    {"max_col_label", v.ColLabel(dom.max_col)},
                    {"max_share", dom.max_share}};
  j["warnings"] = warnings;
  Print(j);
  manifest.Emit(ctx.manifest, o.heatmap);
}

void RunAttnLinkage(const Context& ctx, const AttentionOpts& o) {
  RunManifest manifest = NewManifest(ctx, "attn-linkage");
  Warnings warnings;
  const AttentionView v = LoadView(manifest, o, warnings);
  PrintWarnings(warnings);
  const ModalityLinkage l = ComputeModalityLinkage(v, o.k);
  Print({{"k", o.k},
         {"boundary", *o.boundary},
         {"prompt_rows_topk_in_prompt_frac", l.prompt_rows_topk_in_prompt_frac},
         {"patch_rows_topk_in_patch_frac", l.patch_rows_topk_in_patch_frac},
         {"prompt_rows_cross_frac", l.prompt_rows_cross_frac},
         {"patch_rows_cross_frac", l.patch_rows_cross_frac},
         {"cross_modal_topk_frac", l.cross_modal_topk_frac},
         {"first_column_mass_mean", l.first_column_mass_mean},
         {"warnings", warnings}});
  manifest.Emit(ctx.manifest, std::nullopt);
}

// ---------------------------------------------------------------- perturb

struct PerturbOpts {
  Path input;
  double ratio = 0.0;
  std::uint64_t seed = 0;
  std::string mode = "gaussian";
  Path out;
};

void RunPerturb(const Context& ctx, const PerturbOpts& o) {
  RunManifest manifest = NewManifest(ctx, "perturb");
  manifest.AddInput(o.input);
  manifest.AddSeed("seed", o.seed);
  const Matrix m = LoadInputMatrix(o.input);
  const PerturbConfig cfg{o.ratio, o.seed, ParsePerturbMode(o.mode)};
  const PerturbResult r = ReplaceValues(m, cfg);
  PrintWarnings(r.warnings);
  WriteMatrix(o.out, r.perturbed);
  manifest.AddOutput(o.out);
  Json j;
  j["ratio"] = o.ratio;
  j["changed_count"] = r.changed_count;
  j["total"] = m.size();
  j["fit_mean"] = r.fit_mean;
  j["fit_std"] = r.fit_std;
  j["min"] = r.min;
  j["max"] = r.max;
  j["mode"] = PerturbModeName(cfg.mode);
  j["effective_mode"] = PerturbModeName(r.effective_mode);
  j["granularity"] = "value";
  j["warnings"] = r.warnings;
  j["out"] = o.out.string();
  Print(j);
  manifest.SetResult(j);
  manifest.Emit(ctx.manifest, o.out);
}

// ---------------------------------------------------------------- mse

struct MseOpts {
  Path y;
  Path yhat;
};

void RunMse(const Context& ctx, const MseOpts& o) {
  RunManifest manifest = NewManifest(ctx, "mse");
  manifest.AddInput(o.y);
  manifest.AddInput(o.yhat);
  const Matrix y = LoadInputMatrix(o.y);
  const Matrix yhat = LoadInputMatrix(o.yhat);
  if (y.rows() != yhat.rows() || y.cols() != yhat.cols()) {
    Fail(ErrorCode::kInvalidData,
         o.yhat.string() + ": shape " + std::to_string(yhat.rows()) + "x" +
             std::to_string(yhat.cols()) + " differs from " + o.y.string() + " (" +
             std::to_string(y.rows()) + "x" + std::to_string(y.cols()) + ")");
  }
  const double mse = Mse(y.data(), yhat.data());
  const double mae = Mae(y.data(), yhat.data());
  Print({{"mse", mse}, {"mae", mae}, {"n", y.size()}});
  manifest.SetResult({{"mse", mse}, {"mae", mae}});
  manifest.Emit(ctx.manifest, std::nullopt);
}

// Binds `fn(ctx, *opts)` as the subcommand's deferred action.
template <typename Opts, typename Fn>
void Bind(CLI::App* sub, Context& ctx, std::shared_ptr<Opts> opts, Fn fn) {
  sub->callback([&ctx, opts, fn] { ctx.run = [&ctx, opts, fn] { fn(ctx, *opts); }; });
}

void AddAttentionFlags(CLI::App* sub, AttentionOpts& o) {
  sub->add_option("--attention", o.attention, "Attention matrix (TSLX or CSV)")
      ->required();
  sub->add_option("--row-labels", o.row_labels, "One label per line for rows");
  sub->add_option("--col-labels", o.col_labels, "One label per line for columns");
  sub->add_flag("--row-stochastic", o.row_stochastic,
                "Require every row to sum to 1 within 1e-4");
}

}  // namespace

void RegisterCommands(CLI::App& app, Context& ctx) {
  {
    auto o = std::make_shared<FeaturesOpts>();
    auto* sub = app.add_subcommand("features", "Extract the 7 per-patch features");
    sub->add_option("--patches", o->patches, "Patch matrix (rows = patches)")->required();
    sub->add_option("--out", o->out, "Write the feature table (.csv or TSLX)");
    Bind(sub, ctx, o, RunFeatures);
  }
  {
    auto o = std::make_shared<SmiOpts>();
    auto* sub = app.add_subcommand("smi", "Semantic Matching Index of a grouping");
    sub->add_option("--patches", o->patches, "Patch matrix")->required();
    sub->add_option("--groups", o->groups, "Group assignment CSV")->required();
    sub->add_flag("--precomputed", o->precomputed, "Input already holds features");
    sub->add_option("--a", o->a, "Scale a")->capture_default_str();
    sub->add_option("--b", o->b, "Scale b")->capture_default_str();
    Bind(sub, ctx, o, RunSmi);
  }
  {
    auto o = std::make_shared<SilhouetteOpts>();
    auto* sub = app.add_subcommand("silhouette", "Silhouette score of a grouping");
    sub->add_option("--patches", o->patches, "Patch matrix")->required();
    sub->add_option("--groups", o->groups, "Group assignment CSV")->required();
    sub->add_flag("--precomputed", o->precomputed, "Input already holds features");
    sub->add_flag("--raw-features", o->raw_features,
                  "Use unstandardized features");
    Bind(sub, ctx, o, RunSilhouette);
  }
  {
    auto o = std::make_shared<SynthOpts>();
    auto* sub = app.add_subcommand("synth-validate",
                                   "Generate the 11 synthetic scenarios and score them");
    sub->add_option("--seed", o->seed, "PRNG seed")->capture_default_str();
    sub->add_option("--out", o->out, "Output directory")->required();
    sub->add_option("--groups", o->groups, "Groups per scenario")->capture_default_str();
    sub->add_option("--patches-per-group", o->patches_per_group, "Patches per group")
        ->capture_default_str();
    sub->add_option("--length", o->length, "Patch length")->capture_default_str();
    Bind(sub, ctx, o, RunSynth);
  }
  {
    auto o = std::make_shared<PrototypesOpts>();
    auto* sub = app.add_subcommand("prototypes", "Extract text prototypes");
    sub->add_option("--method", o->method, "Extraction method")
        ->required()
        ->check(CLI::IsMember({"pca", "kmeans", "random", "text", "simexp", "linear"}));
    sub->add_option("--k", o->k, "Number of prototypes");
    sub->add_option("--seed", o->seed, "PRNG seed")->capture_default_str();
    sub->add_option("--vocab", o->vocab, "Vocabulary file, one token per line");
    sub->add_option("--embeddings", o->embeddings, "Vocabulary embedding matrix");
    sub->add_option("--words", o->words, "'bundled' or a word file");
    sub->add_option("--input", o->input, "Learned prototype matrix (method linear)");
    sub->add_option("--max-iter", o->max_iter, "K-means iteration cap")
        ->capture_default_str();
    sub->add_option("--tol", o->tol, "K-means centroid-shift tolerance")
        ->capture_default_str();
    sub->add_option("--out", o->out, "Prototype TSLX output")->required();
    Bind(sub, ctx, o, RunPrototypes);
  }
  {
    auto o = std::make_shared<AssignOpts>();
    auto* sub = app.add_subcommand("assign-tokens",
                                   "Nearest tokens per row and ordered token-set groups");
    sub->add_option("--embeddings", o->embeddings, "Aligned embeddings")->required();
    sub->add_option("--vocab-embeddings", o->vocab_embeddings, "Vocabulary embeddings")
        ->required();
    sub->add_option("--vocab", o->vocab, "Vocabulary file")->required();
    sub->add_option("--k", o->k, "Token-set length")->required()->check(CLI::PositiveNumber);
    sub->add_option("--out", o->out, "Write the group assignment CSV");
    Bind(sub, ctx, o, RunAssign);
  }
  {
    auto o = std::make_shared<SweepOpts>();
    auto* sub = app.add_subcommand("smi-sweep", "SMI of token-set groupings for k = 1..k-max");
    sub->add_option("--aligned", o->aligned, "Aligned embeddings")->required();
    sub->add_option("--vocab-embeddings", o->vocab_embeddings, "Vocabulary embeddings")
        ->required();
    sub->add_option("--vocab", o->vocab, "Vocabulary file")->required();
    sub->add_option("--patches", o->patches, "Raw patches, one per aligned row")
        ->required();
    sub->add_option("--k-max", o->k_max, "Largest k")->required()->check(CLI::PositiveNumber);
    sub->add_option("--a", o->a, "Scale a")->capture_default_str();
    sub->add_option("--b", o->b, "Scale b")->capture_default_str();
    sub->add_option("--out", o->out, "Write the sweep table CSV");
    Bind(sub, ctx, o, RunSweep);
  }
  {
    auto o = std::make_shared<SimilarityOpts>();
    auto* sub = app.add_subcommand("similarity",
                                   "Cosine similarity of embeddings to selected words");
    sub->add_option("--embeddings", o->embeddings, "Embeddings to score")->required();
    sub->add_option("--vocab", o->vocab, "Vocabulary file")->required();
    sub->add_option("--vocab-embeddings", o->vocab_embeddings, "Vocabulary embeddings")
        ->required();
    sub->add_option("--words", o->words, "'bundled' or a word-group file")
        ->capture_default_str();
    sub->add_option("--out", o->out, "Write the heatmap (.csv or TSLX)");
    Bind(sub, ctx, o, RunSimilarity);
  }
  {
    auto o = std::make_shared<AttentionOpts>();
    auto* sub = app.add_subcommand("attn-top", "Top-k attended columns and dominance");
    AddAttentionFlags(sub, *o);
    sub->add_option("--k", o->k, "Entries per row")->capture_default_str()
        ->check(CLI::PositiveNumber);
    sub->add_option("--heatmap", o->heatmap, "Export the labelled heatmap CSV");
    Bind(sub, ctx, o, RunAttnTop);
  }
  {
    auto o = std::make_shared<AttentionOpts>();
    o->k = 1;
    auto* sub = app.add_subcommand("attn-linkage", "Prompt/patch attention linkage");
    AddAttentionFlags(sub, *o);
    sub->add_option("--boundary", o->boundary, "First patch column")->required();
    sub->add_option("--k", o->k, "Entries per row")->capture_default_str()
        ->check(CLI::PositiveNumber);
    Bind(sub, ctx, o, RunAttnLinkage);
  }
  {
    auto o = std::make_shared<PerturbOpts>();
    auto* sub = app.add_subcommand("perturb", "Randomly replace a fraction of values");
    sub->add_option("--input", o->input, "Embedding matrix")->required();
    sub->add_option("--ratio", o->ratio, "Fraction of values to replace")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    sub->add_option("--seed", o->seed, "PRNG seed")->capture_default_str();
    sub->add_option("--mode", o->mode, "Replacement distribution")
        ->capture_default_str()
        ->check(CLI::IsMember({"gaussian", "gaussian_fit", "uniform", "uniform_range"}));
    sub->add_option("--out", o->out, "Perturbed TSLX output")->required();
    Bind(sub, ctx, o, RunPerturb);
  }
  {
    auto o = std::make_shared<MseOpts>();
    auto* sub = app.add_subcommand("mse", "Mean squared and absolute error");
    sub->add_option("--y", o->y, "Ground truth matrix")->required();
    sub->add_option("--yhat", o->yhat, "Prediction matrix")->required();
    Bind(sub, ctx, o, RunMse);
  }
}

}  // namespace tslx::cli
