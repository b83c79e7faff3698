#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "srcp/classify.hpp"
#include "srcp/data.hpp"
#include "srcp/kernel.hpp"
#include "srcp/pursuit.hpp"
#include "srcp/rng.hpp"

using json = nlohmann::json;
using namespace srcp;

namespace {

constexpr const char* kVersion = "0.1.0";

bool g_verbose = false;

void progress(const std::string& msg) {
    if (g_verbose) std::cerr << msg << "\n";
}

std::string fnv1a_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    std::uint64_t h = 1469598103934665603ULL;
    char buf[1 << 14];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ULL;
        }
        if (!in) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + hex;
}

void write_manifest(const std::string& out_path, const std::string& command, json params,
                    const std::vector<std::string>& inputs) {
    json m;
    m["artifact_version"] = kVersion;
    m["command"] = command;
    m["parameters"] = std::move(params);
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char ts[32];
    std::strftime(ts, sizeof ts, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    m["timestamp"] = ts;
    json digests = json::object();
    for (const auto& p : inputs) digests[p] = fnv1a_digest(p);
    m["inputs"] = digests;
    std::ofstream out(out_path + ".manifest.json");
    if (!out) throw std::runtime_error("cannot write manifest for " + out_path);
    out << m.dump(2) << "\n";
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// plain numeric CSV, no header; rows are dimensions, columns are atoms
Mat load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            char* end = nullptr;
            double v = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str())
                throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                         ": non-numeric cell '" + cell + "'");
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": ragged row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(path + ": empty matrix");
    Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.front().size(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    return m;
}

Vec load_vector_csv(const std::string& path) {
    Mat m = load_matrix_csv(path);
    if (m.cols() == 1) return m.col(0);
    if (m.rows() == 1) return m.row(0).transpose();
    throw std::runtime_error(path + ": expected a single row or column");
}

std::vector<std::string> split_list(const std::string& s, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

// "1..30" or "1,2,5"
std::vector<int> parse_int_range(const std::string& s) {
    std::vector<int> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        int lo = std::stoi(s.substr(0, dots));
        int hi = std::stoi(s.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
        for (const auto& item : split_list(s)) out.push_back(std::stoi(item));
    }
    if (out.empty()) throw std::runtime_error("empty integer list: " + s);
    return out;
}

// "S=1,2,4;gamma=0.5,1,2;folds=5"
CvGrid parse_cv_grid(const std::string& s) {
    CvGrid grid;
    grid.gammas = {1.0};
    for (const auto& part : split_list(s, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad cv grid term: " + part);
        std::string key = part.substr(0, eq);
        std::string val = part.substr(eq + 1);
        if (key == "S" || key == "sparsity") {
            grid.sparsity_levels = parse_int_range(val);
        } else if (key == "gamma") {
            grid.gammas.clear();
            for (const auto& g : split_list(val)) grid.gammas.push_back(std::stod(g));
        } else if (key == "folds") {
            grid.folds = std::stoi(val);
        } else {
            throw std::runtime_error("unknown cv grid key: " + key);
        }
    }
    if (grid.sparsity_levels.empty())
        throw std::runtime_error("cv grid needs S=... sparsity levels");
    return grid;
}

struct KernelOpts {
    std::string family;
    double gamma = 1.0;
    int degree = 2;
    double coef0 = 0.0;

    KernelSpec to_spec() const {
        KernelFamily f = kernel_family_from_string(family);
        if (f == KernelFamily::rbf) return KernelSpec::make_rbf(gamma);
        if (f == KernelFamily::polynomial) return KernelSpec::make_polynomial(degree, coef0);
        return KernelSpec::make_linear();
    }
};

ClassifierKind make_kind(const std::string& method, int sparsity, const KernelOpts& kopts) {
    ClassifierKind kind;
    kind.method = method_from_string(method);
    kind.sparsity = sparsity;
    if (is_kernel_method(kind.method)) {
        if (kopts.family.empty())
            throw std::runtime_error("method " + method + " requires --kernel");
        kind.kernel = kopts.to_spec();
    } else if (!kopts.family.empty()) {
        throw std::runtime_error("method " + method + " does not take --kernel");
    }
    return kind;
}

void warn_clamp(const LabeledDataset& train, int sparsity) {
    int smallest = static_cast<int>(train.size());
    auto counts = std::vector<int>(static_cast<std::size_t>(train.num_classes()), 0);
    for (int l : train.labels) ++counts[static_cast<std::size_t>(l)];
    for (int c : counts) smallest = std::min(smallest, c);
    if (sparsity > smallest)
        std::cerr << "warning: sparsity " << sparsity << " exceeds the smallest class size "
                  << smallest << "; clamping per class\n";
}

std::vector<int> predict(const LabeledDictionary& model, const Mat& samples,
                         const ClassifierKind& kind) {
    auto results = classify_batch(model, samples, kind);
    std::vector<int> labels;
    labels.reserve(results.size());
    for (const auto& r : results) labels.push_back(r.label);
    return labels;
}

// ---------------------------------------------------------------- pursue

int cmd_pursue(const std::string& dict_path, const std::string& signal_path, bool fig1,
               const std::string& method, int sparsity, double max_subsets,
               const std::string& out_path) {
    Mat dict;
    Vec signal;
    std::vector<std::string> inputs;
    if (fig1) {
        std::tie(dict, signal) = fig1_fixture();
    } else {
        if (dict_path.empty() || signal_path.empty())
            throw std::runtime_error("pursue needs --dict and --signal (or --fig1)");
        dict = load_matrix_csv(dict_path);
        signal = load_vector_csv(signal_path);
        for (Eigen::Index j = 0; j < dict.cols(); ++j) {
            double n = dict.col(j).norm();
            if (n <= 0.0)
                throw std::runtime_error("dictionary column " + std::to_string(j) + " is zero");
            dict.col(j) /= n;
        }
        inputs = {dict_path, signal_path};
    }

    PursuitResult res;
    if (method == "omp") res = omp(dict, signal, sparsity);
    else if (method == "ols") res = ols(dict, signal, sparsity);
    else if (method == "cols") res = cols(dict, signal, sparsity);
    else if (method == "exhaustive") res = exhaustive_best_subset(dict, signal, sparsity, max_subsets);
    else throw std::runtime_error("unknown pursuit method: " + method);

    json out;
    out["method"] = method;
    out["sparsity"] = sparsity;
    out["support"] = res.support;
    std::vector<double> coeffs(res.coefficients.data(), res.coefficients.data() + res.coefficients.size());
    out["coefficients"] = coeffs;
    out["residual_history"] = res.residual_history;
    out["final_residual_norm"] = res.final_residual_norm;

    if (out_path.empty()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write " + out_path);
        f << out.dump(2) << "\n";
        json params = {{"method", method}, {"sparsity", sparsity}, {"fig1", fig1},
                       {"max_subsets", max_subsets}};
        write_manifest(out_path, "pursue", params, inputs);
    }
    return 0;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& train_path, const std::string& test_path,
                 const std::string& method, int sparsity, const KernelOpts& kopts,
                 const std::string& out_path) {
    LabeledDataset train = load_csv(train_path);
    LabeledDataset test = load_csv(test_path);
    if (test.dim() != train.dim())
        throw std::runtime_error("train/test dimension mismatch: " + std::to_string(train.dim()) +
                                 " vs " + std::to_string(test.dim()));
    ClassifierKind kind = make_kind(method, sparsity, kopts);
    warn_clamp(train, sparsity);

    LabeledDictionary model = fit_dataset(train);
    progress("classifying " + std::to_string(test.size()) + " samples");
    auto results = classify_batch(model, test.features, kind);

    // test labels were mapped by first appearance in the test file; align to train ids by name
    std::map<std::string, int> train_id;
    for (int c = 0; c < train.num_classes(); ++c)
        train_id[train.class_names[static_cast<std::size_t>(c)]] = c;
    std::vector<int> truth;
    truth.reserve(static_cast<std::size_t>(test.size()));
    for (int l : test.labels) {
        auto it = train_id.find(test.class_names[static_cast<std::size_t>(l)]);
        truth.push_back(it == train_id.end() ? -1 : it->second);
    }

    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "sample,true_label,predicted_label";
    for (int c = 0; c < train.num_classes(); ++c) out << ",residual_" << c;
    out << "\n";
    std::vector<int> pred;
    for (std::size_t i = 0; i < results.size(); ++i) {
        pred.push_back(results[i].label);
        out << i << ","
            << (truth[i] >= 0 ? train.class_names[static_cast<std::size_t>(truth[i])] : "?") << ","
            << train.class_names[static_cast<std::size_t>(results[i].label)];
        for (double r : results[i].residuals) out << "," << fmt(r);
        out << "\n";
    }
    out.close();

    json params = {{"method", method}, {"sparsity", sparsity}};
    if (kind.kernel) params["kernel"] = {{"family", kopts.family}, {"gamma", kopts.gamma},
                                         {"degree", kopts.degree}, {"coef0", kopts.coef0}};
    write_manifest(out_path, "classify", params, {train_path, test_path});

    bool have_truth = true;
    for (int t : truth)
        if (t < 0) have_truth = false;
    if (have_truth)
        std::cout << "overall accuracy: " << accuracy_percent(pred, truth) << "%\n";
    return 0;
}

// ---------------------------------------------------------------- bench

int cmd_bench(const std::string& data_path, const std::string& methods_arg,
              const std::string& sizes_arg, int repeats, std::uint64_t seed,
              const std::string& cv_arg, int sparsity, const KernelOpts& kopts,
              const std::string& out_path) {
    LabeledDataset data = load_csv(data_path);
    auto methods = split_list(methods_arg);
    auto sizes = parse_int_range(sizes_arg);
    bool use_cv = !cv_arg.empty();
    CvGrid grid;
    if (use_cv) grid = parse_cv_grid(cv_arg);

    json cv_log = json::array();
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "method";
    for (int s : sizes) out << "," << s;
    out << "\n";

    for (const auto& method : methods) {
        out << method;
        for (int size : sizes) {
            std::vector<double> accs;
            for (int r = 0; r < repeats; ++r) {
                progress(method + " size " + std::to_string(size) + " repeat " + std::to_string(r));
                SplitSpec split_spec{size, repeats, seed};
                auto [train, test] = stratified_split(data, split_spec, r);
                ClassifierKind kind = make_kind(method, sparsity, kopts);
                if (use_cv) {
                    CvResult cv = cross_validate(train, kind, grid, seed + static_cast<std::uint64_t>(r));
                    kind.sparsity = cv.best_sparsity;
                    if (kind.kernel && kind.kernel->family == KernelFamily::rbf)
                        kind.kernel = KernelSpec::make_rbf(cv.best_gamma);
                    cv_log.push_back({{"method", method}, {"train_size", size}, {"repeat", r},
                                      {"sparsity", cv.best_sparsity}, {"gamma", cv.best_gamma}});
                }
                LabeledDictionary model = fit_dataset(train);
                auto pred = predict(model, test.features, kind);
                accs.push_back(accuracy_percent(pred, test.labels));
            }
            MeanStd ms = mean_std(accs);
            char cell[64];
            if (repeats == 1)
                std::snprintf(cell, sizeof cell, "%.1f", ms.mean);
            else
                std::snprintf(cell, sizeof cell, "%.1f (%.1f)", ms.mean, ms.stddev);
            out << "," << cell;
        }
        out << "\n";
    }
    out.close();

    json params = {{"methods", methods_arg}, {"train_sizes", sizes_arg}, {"repeats", repeats},
                   {"seed", seed}, {"cv", cv_arg}, {"sparsity", sparsity}};
    if (!kopts.family.empty())
        params["kernel"] = {{"family", kopts.family}, {"gamma", kopts.gamma}};
    params["cv_selections"] = cv_log;
    write_manifest(out_path, "bench", params, {data_path});
    return 0;
}

// ---------------------------------------------------------------- residual-curve

int cmd_residual_curve(const std::string& train_path, int cls, int repeats, int sparsity_max,
                       std::uint64_t seed, const std::string& out_path) {
    LabeledDataset data = load_csv(train_path);
    if (cls < 0 || cls >= data.num_classes())
        throw std::runtime_error("class id " + std::to_string(cls) + " out of range");
    std::vector<int> members;
    for (Eigen::Index i = 0; i < data.size(); ++i)
        if (data.labels[static_cast<std::size_t>(i)] == cls) members.push_back(static_cast<int>(i));
    if (members.size() < 2)
        throw std::runtime_error("class " + std::to_string(cls) +
                                 " too small for leave-one-out residual curves");

    const int n_atoms = static_cast<int>(members.size()) - 1;
    int s_max = std::min<int>(sparsity_max, std::min<int>(n_atoms, static_cast<int>(data.dim())));
    std::vector<double> sum_omp(static_cast<std::size_t>(s_max) + 1, 0.0);
    std::vector<double> sum_ols = sum_omp, sum_cols = sum_omp;

    for (int r = 0; r < repeats; ++r) {
        Rng rng = Rng::forked(seed, static_cast<std::uint64_t>(r));
        int pick = static_cast<int>(rng.index(members.size()));
        Vec x = data.features.col(members[static_cast<std::size_t>(pick)]);
        Mat dict(data.dim(), n_atoms);
        Eigen::Index col = 0;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (static_cast<int>(i) == pick) continue;
            Vec a = data.features.col(members[i]);
            dict.col(col++) = a / a.norm();
        }
        auto add = [&](std::vector<double>& acc, const PursuitResult& res) {
            for (int m = 0; m <= s_max; ++m)
                acc[static_cast<std::size_t>(m)] += res.residual_history[static_cast<std::size_t>(m)];
        };
        add(sum_omp, omp(dict, x, s_max));
        add(sum_ols, ols(dict, x, s_max));
        // restart selection means an intermediate residual of the winning run
        // is not the best m-atom residual; take the final per sparsity level
        sum_cols[0] += x.norm();
        for (int m = 1; m <= s_max; ++m)
            sum_cols[static_cast<std::size_t>(m)] += cols(dict, x, m).final_residual_norm;
    }

    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "iteration,omp,ols,cols\n";
    for (int m = 0; m <= s_max; ++m)
        out << m << "," << fmt(sum_omp[static_cast<std::size_t>(m)] / repeats) << ","
            << fmt(sum_ols[static_cast<std::size_t>(m)] / repeats) << ","
            << fmt(sum_cols[static_cast<std::size_t>(m)] / repeats) << "\n";
    out.close();

    json params = {{"class", cls}, {"repeats", repeats}, {"sparsity_max", sparsity_max},
                   {"seed", seed}};
    write_manifest(out_path, "residual-curve", params, {train_path});
    return 0;
}

// ---------------------------------------------------------------- sweep

int cmd_sweep(const std::string& data_path, const std::string& methods_arg,
              const std::string& sparsity_arg, int train_size, std::uint64_t seed,
              const KernelOpts& kopts, const std::string& out_path) {
    LabeledDataset data = load_csv(data_path);
    auto methods = split_list(methods_arg);
    auto levels = parse_int_range(sparsity_arg);

    SplitSpec split_spec{train_size, 1, seed};
    auto [train, test] = stratified_split(data, split_spec, 0);
    warn_clamp(train, *std::max_element(levels.begin(), levels.end()));
    LabeledDictionary model = fit_dataset(train);

    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << "method,sparsity,accuracy\n";
    for (const auto& method : methods) {
        for (int s : levels) {
            progress(method + " S=" + std::to_string(s));
            ClassifierKind kind = make_kind(method, s, kopts);
            auto pred = predict(model, test.features, kind);
            char acc[32];
            std::snprintf(acc, sizeof acc, "%.4f", accuracy_percent(pred, test.labels));
            out << method << "," << s << "," << acc << "\n";
        }
    }
    out.close();

    json params = {{"methods", methods_arg}, {"sparsity", sparsity_arg},
                   {"train_size", train_size}, {"seed", seed}};
    write_manifest(out_path, "sweep", params, {data_path});
    return 0;
}

// ---------------------------------------------------------------- synth

int cmd_synth(int classes, int subspace_dim, int ambient_dim, int per_class, double noise,
              std::uint64_t seed, const std::string& out_path) {
    LabeledDataset ds = synth_subspace(classes, subspace_dim, ambient_dim, per_class, noise, seed);
    save_csv(ds, out_path);
    json params = {{"classes", classes}, {"subspace_dim", subspace_dim},
                   {"ambient_dim", ambient_dim}, {"per_class", per_class}, {"noise", noise},
                   {"seed", seed}};
    write_manifest(out_path, "synth", params, {});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Greedy sparse-recovery solvers and class-dependent sparse classifiers"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", g_verbose, "progress messages on stderr");

    // pursue
    std::string dict_path, signal_path, method = "ols", out_path;
    bool fig1 = false;
    int sparsity = 1;
    double max_subsets = 2e6;
    auto* pursue = app.add_subcommand("pursue", "run one solver on one signal");
    pursue->add_option("--dict", dict_path, "dictionary CSV (rows = dims, cols = atoms)");
    pursue->add_option("--signal", signal_path, "signal CSV (one row or column)");
    pursue->add_flag("--fig1", fig1, "use the built-in 3-atom demonstration instance");
    pursue->add_option("--method", method, "omp|ols|cols|exhaustive")->required();
    pursue->add_option("--sparsity", sparsity, "sparsity level S")->required();
    pursue->add_option("--max-subsets", max_subsets, "exhaustive subset cap");
    pursue->add_option("--out", out_path, "output JSON (stdout if omitted)");

    // classify
    std::string train_path, test_path;
    KernelOpts kopts;
    auto* cls_cmd = app.add_subcommand("classify", "classify a labeled test set");
    cls_cmd->add_option("--train", train_path)->required();
    cls_cmd->add_option("--test", test_path)->required();
    cls_cmd->add_option("--method", method, "src|ksrc|cd_omp|cd_ols|cd_cols|kcd_omp|kcd_ols|kcd_cols")
        ->required();
    cls_cmd->add_option("--sparsity", sparsity)->required();
    cls_cmd->add_option("--kernel", kopts.family, "linear|rbf|polynomial");
    cls_cmd->add_option("--gamma", kopts.gamma, "rbf bandwidth");
    cls_cmd->add_option("--degree", kopts.degree, "polynomial degree");
    cls_cmd->add_option("--coef0", kopts.coef0, "polynomial offset");
    cls_cmd->add_option("--out", out_path, "per-sample result CSV")->required();

    // bench
    std::string data_path, methods_arg, sizes_arg = "10,30,50", cv_arg;
    int repeats = 1;
    std::uint64_t seed = 0;
    auto* bench = app.add_subcommand("bench", "accuracy table over train sizes and repeats");
    bench->add_option("--data", data_path)->required();
    bench->add_option("--methods", methods_arg, "comma-separated method list")->required();
    bench->add_option("--train-sizes", sizes_arg);
    bench->add_option("--repeats", repeats);
    bench->add_option("--seed", seed);
    bench->add_option("--cv", cv_arg, "per-repeat grid, e.g. S=1..8;gamma=0.5,1,2;folds=5");
    bench->add_option("--sparsity", sparsity, "fixed S when --cv is not given");
    bench->add_option("--kernel", kopts.family);
    bench->add_option("--gamma", kopts.gamma);
    bench->add_option("--out", out_path)->required();

    // residual-curve
    int class_id = 0, sparsity_max = 10;
    auto* curve = app.add_subcommand("residual-curve",
                                     "average same-class residual per iteration for omp/ols/cols");
    curve->add_option("--train", train_path)->required();
    curve->add_option("--class", class_id)->required();
    curve->add_option("--repeats", repeats)->required();
    curve->add_option("--sparsity-max", sparsity_max)->required();
    curve->add_option("--seed", seed);
    curve->add_option("--out", out_path)->required();

    // sweep
    std::string sparsity_arg = "1..10";
    int train_size = 30;
    auto* sweep = app.add_subcommand("sweep", "accuracy as a function of sparsity level");
    sweep->add_option("--data", data_path)->required();
    sweep->add_option("--methods", methods_arg)->required();
    sweep->add_option("--sparsity", sparsity_arg, "range (1..30) or list");
    sweep->add_option("--train-size", train_size);
    sweep->add_option("--seed", seed);
    sweep->add_option("--kernel", kopts.family);
    sweep->add_option("--gamma", kopts.gamma);
    sweep->add_option("--out", out_path)->required();

    // synth
    int classes = 3, subspace_dim = 4, ambient_dim = 50, per_class = 60;
    double noise = 0.05;
    auto* synth = app.add_subcommand("synth", "generate a synthetic subspace dataset CSV");
    synth->add_option("--classes", classes);
    synth->add_option("--subspace-dim", subspace_dim);
    synth->add_option("--ambient-dim", ambient_dim);
    synth->add_option("--per-class", per_class);
    synth->add_option("--noise", noise);
    synth->add_option("--seed", seed);
    synth->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (pursue->parsed())
            return cmd_pursue(dict_path, signal_path, fig1, method, sparsity, max_subsets, out_path);
        if (cls_cmd->parsed())
            return cmd_classify(train_path, test_path, method, sparsity, kopts, out_path);
        if (bench->parsed())
            return cmd_bench(data_path, methods_arg, sizes_arg, repeats, seed, cv_arg, sparsity,
                             kopts, out_path);
        if (curve->parsed())
            return cmd_residual_curve(train_path, class_id, repeats, sparsity_max, seed, out_path);
        if (sweep->parsed())
            return cmd_sweep(data_path, methods_arg, sparsity_arg, train_size, seed, kopts, out_path);
        if (synth->parsed())
            return cmd_synth(classes, subspace_dim, ambient_dim, per_class, noise, seed, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
