#include "srcp/data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "srcp/rng.hpp"

namespace srcp {
namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    std::stringstream ss(line);
    while (std::getline(ss, cur, ',')) fields.push_back(cur);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

LabeledDataset subset(const LabeledDataset& ds, const std::vector<int>& idx) {
    LabeledDataset out;
    out.features.resize(ds.features.rows(), static_cast<Eigen::Index>(idx.size()));
    out.labels.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        out.features.col(static_cast<Eigen::Index>(i)) = ds.features.col(idx[i]);
        out.labels.push_back(ds.labels[static_cast<std::size_t>(idx[i])]);
    }
    out.class_names = ds.class_names;
    return out;
}

std::vector<std::vector<int>> class_members(const LabeledDataset& ds) {
    std::vector<std::vector<int>> members(static_cast<std::size_t>(ds.num_classes()));
    for (Eigen::Index i = 0; i < ds.size(); ++i)
        members[static_cast<std::size_t>(ds.labels[static_cast<std::size_t>(i)])].push_back(
            static_cast<int>(i));
    return members;
}

}  // namespace

LabeledDataset load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("load_csv: " + path + ": empty file");
    auto header = split_line(line);
    if (header.size() < 2 || trim(header.back()) != "label")
        throw std::runtime_error("load_csv: " + path + ":1: header must end with a 'label' column");
    const std::size_t d = header.size() - 1;
    for (std::size_t i = 0; i < d; ++i)
        if (trim(header[i]) != "f" + std::to_string(i))
            throw std::runtime_error("load_csv: " + path + ":1: expected column f" +
                                     std::to_string(i) + ", got '" + trim(header[i]) + "'");

    std::vector<double> values;
    std::vector<int> labels;
    std::vector<std::string> class_names;
    std::map<std::string, int> name_to_id;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_line(line);
        if (fields.size() != d + 1)
            throw std::runtime_error("load_csv: " + path + ":" + std::to_string(line_no) +
                                     ": expected " + std::to_string(d + 1) + " fields, got " +
                                     std::to_string(fields.size()));
        for (std::size_t i = 0; i < d; ++i) {
            const std::string cell = trim(fields[i]);
            char* end = nullptr;
            double v = std::strtod(cell.c_str(), &end);
            if (cell.empty() || end != cell.c_str() + cell.size() || !std::isfinite(v))
                throw std::runtime_error("load_csv: " + path + ":" + std::to_string(line_no) +
                                         ": non-numeric feature cell '" + cell + "'");
            values.push_back(v);
        }
        const std::string name = trim(fields[d]);
        if (name.empty())
            throw std::runtime_error("load_csv: " + path + ":" + std::to_string(line_no) +
                                     ": empty label");
        auto it = name_to_id.find(name);
        if (it == name_to_id.end()) {
            it = name_to_id.emplace(name, static_cast<int>(class_names.size())).first;
            class_names.push_back(name);
        }
        labels.push_back(it->second);
    }
    if (labels.empty()) throw std::runtime_error("load_csv: " + path + ": no samples");

    LabeledDataset ds;
    ds.features.resize(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(labels.size()));
    for (std::size_t s = 0; s < labels.size(); ++s)
        for (std::size_t i = 0; i < d; ++i)
            ds.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(s)) =
                values[s * d + i];
    ds.labels = std::move(labels);
    ds.class_names = std::move(class_names);
    return ds;
}

void save_csv(const LabeledDataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_csv: cannot write " + path);
    for (Eigen::Index i = 0; i < ds.dim(); ++i) out << "f" << i << ",";
    out << "label\n";
    char buf[64];
    for (Eigen::Index s = 0; s < ds.size(); ++s) {
        for (Eigen::Index i = 0; i < ds.dim(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", ds.features(i, s));
            out << buf << ",";
        }
        out << ds.class_names[static_cast<std::size_t>(ds.labels[static_cast<std::size_t>(s)])]
            << "\n";
    }
    if (!out) throw std::runtime_error("save_csv: write failed for " + path);
}

std::pair<LabeledDataset, LabeledDataset> stratified_split(const LabeledDataset& ds,
                                                           const SplitSpec& spec, int repeat) {
    if (spec.per_class_train < 1)
        throw std::invalid_argument("stratified_split: per_class_train must be >= 1");
    auto members = class_members(ds);
    for (int c = 0; c < ds.num_classes(); ++c)
        if (static_cast<int>(members[static_cast<std::size_t>(c)].size()) <= spec.per_class_train)
            throw std::runtime_error("stratified_split: class '" +
                                     ds.class_names[static_cast<std::size_t>(c)] + "' has only " +
                                     std::to_string(members[static_cast<std::size_t>(c)].size()) +
                                     " samples, need more than " +
                                     std::to_string(spec.per_class_train));

    Rng rng = Rng::forked(spec.seed, static_cast<std::uint64_t>(repeat));
    std::vector<int> train_idx, test_idx;
    for (auto& m : members) {
        rng.shuffle(m);
        for (std::size_t i = 0; i < m.size(); ++i)
            (i < static_cast<std::size_t>(spec.per_class_train) ? train_idx : test_idx)
                .push_back(m[i]);
    }
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    return {subset(ds, train_idx), subset(ds, test_idx)};
}

LabeledDataset synth_subspace(int classes, int subspace_dim, int ambient_dim, int per_class,
                              double noise_sigma, std::uint64_t seed) {
    if (classes < 1 || per_class < 1) throw std::invalid_argument("synth_subspace: empty dataset");
    if (subspace_dim < 1 || subspace_dim > ambient_dim)
        throw std::invalid_argument("synth_subspace: subspace_dim must be in [1, ambient_dim]");
    if (noise_sigma < 0.0) throw std::invalid_argument("synth_subspace: negative noise");

    Rng rng(seed);
    LabeledDataset ds;
    ds.features.resize(ambient_dim, static_cast<Eigen::Index>(classes) * per_class);
    Eigen::Index col = 0;
    for (int c = 0; c < classes; ++c) {
        // orthonormal basis by Gram-Schmidt on Gaussian columns
        Mat basis(ambient_dim, subspace_dim);
        for (int j = 0; j < subspace_dim; ++j) {
            Vec v(ambient_dim);
            for (Eigen::Index i = 0; i < ambient_dim; ++i) v(i) = rng.normal();
            for (int k = 0; k < j; ++k) v -= basis.col(k).dot(v) * basis.col(k);
            basis.col(j) = v / v.norm();
        }
        for (int s = 0; s < per_class; ++s) {
            Vec coeff(subspace_dim);
            for (int j = 0; j < subspace_dim; ++j) coeff(j) = rng.normal();
            Vec sample = basis * coeff;
            if (noise_sigma > 0.0)
                for (Eigen::Index i = 0; i < ambient_dim; ++i)
                    sample(i) += noise_sigma * rng.normal();
            ds.features.col(col++) = sample / sample.norm();
            ds.labels.push_back(c);
        }
        ds.class_names.push_back("class" + std::to_string(c));
    }
    return ds;
}

LabeledDictionary fit_dataset(const LabeledDataset& ds) { return fit(ds.features, ds.labels); }

CvResult cross_validate(const LabeledDataset& train, const ClassifierKind& kind_template,
                        const CvGrid& grid, std::uint64_t seed) {
    if (grid.sparsity_levels.empty()) throw std::invalid_argument("cross_validate: empty sparsity grid");
    if (grid.folds < 2) throw std::invalid_argument("cross_validate: folds must be >= 2");
    const bool kernel = is_kernel_method(kind_template.method);
    if (kernel && grid.gammas.empty())
        throw std::invalid_argument("cross_validate: empty gamma grid for kernel method");

    auto members = class_members(train);
    for (int c = 0; c < train.num_classes(); ++c)
        if (static_cast<int>(members[static_cast<std::size_t>(c)].size()) < grid.folds)
            throw std::runtime_error("cross_validate: class '" +
                                     train.class_names[static_cast<std::size_t>(c)] +
                                     "' smaller than fold count");

    // fold assignment: shuffle within each class, then round-robin
    std::vector<int> fold_of(static_cast<std::size_t>(train.size()));
    Rng rng = Rng::forked(seed, 0x6f1d5u);
    for (auto m : members) {
        rng.shuffle(m);
        for (std::size_t i = 0; i < m.size(); ++i)
            fold_of[static_cast<std::size_t>(m[i])] = static_cast<int>(i) % grid.folds;
    }

    std::vector<double> gammas = kernel ? grid.gammas : std::vector<double>{0.0};
    CvResult result{0, 0.0, {}};
    double best_mean = -1.0;
    for (int s : grid.sparsity_levels) {
        for (double g : gammas) {
            ClassifierKind kind = kind_template;
            kind.sparsity = s;
            if (kernel && kind.kernel && kind.kernel->family == KernelFamily::rbf)
                kind.kernel = KernelSpec::make_rbf(g);
            std::vector<double> fold_acc;
            for (int f = 0; f < grid.folds; ++f) {
                std::vector<int> tr, va;
                for (Eigen::Index i = 0; i < train.size(); ++i)
                    (fold_of[static_cast<std::size_t>(i)] == f ? va : tr).push_back(
                        static_cast<int>(i));
                LabeledDataset fold_train = subset(train, tr);
                LabeledDataset fold_val = subset(train, va);
                LabeledDictionary model = fit_dataset(fold_train);
                auto results = classify_batch(model, fold_val.features, kind);
                std::vector<int> pred;
                pred.reserve(results.size());
                for (const auto& r : results) pred.push_back(r.label);
                fold_acc.push_back(accuracy_percent(pred, fold_val.labels));
            }
            double mean = mean_std(fold_acc).mean;
            result.table.push_back({s, kernel ? g : 0.0, mean});
            if (mean > best_mean) {  // strict: earlier (smaller S, then gamma) wins ties
                best_mean = mean;
                result.best_sparsity = s;
                result.best_gamma = kernel ? g : 0.0;
            }
        }
    }
    return result;
}

double accuracy_percent(const std::vector<int>& predictions, const std::vector<int>& truth) {
    if (predictions.size() != truth.size())
        throw std::invalid_argument("accuracy: length mismatch");
    if (truth.empty()) throw std::invalid_argument("accuracy: empty input");
    std::size_t correct = 0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        if (predictions[i] == truth[i]) ++correct;
    return 100.0 * static_cast<double>(correct) / static_cast<double>(truth.size());
}

std::vector<double> per_class_accuracy_percent(const std::vector<int>& predictions,
                                               const std::vector<int>& truth, int num_classes) {
    if (predictions.size() != truth.size())
        throw std::invalid_argument("accuracy: length mismatch");
    std::vector<double> correct(static_cast<std::size_t>(num_classes), 0.0);
    std::vector<double> total(static_cast<std::size_t>(num_classes), 0.0);
    for (std::size_t i = 0; i < truth.size(); ++i) {
        total[static_cast<std::size_t>(truth[i])] += 1.0;
        if (predictions[i] == truth[i]) correct[static_cast<std::size_t>(truth[i])] += 1.0;
    }
    std::vector<double> acc(static_cast<std::size_t>(num_classes), 0.0);
    for (int c = 0; c < num_classes; ++c)
        if (total[static_cast<std::size_t>(c)] > 0)
            acc[static_cast<std::size_t>(c)] =
                100.0 * correct[static_cast<std::size_t>(c)] / total[static_cast<std::size_t>(c)];
    return acc;
}

MeanStd mean_std(const std::vector<double>& values) {
    if (values.empty()) throw std::invalid_argument("mean_std: empty input");
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    if (values.size() == 1) return {mean, 0.0};
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

}  // namespace srcp
