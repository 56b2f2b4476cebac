#include "prowras/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "prowras/format.hpp"
#include "prowras/rng.hpp"

namespace prowras {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::string unquote(std::string s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(unquote(trim(cell)));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

double parse_cell(const std::string& cell, std::size_t line_no, std::size_t col_no) {
    double v = 0.0;
    const char* b = cell.data();
    const char* e = b + cell.size();
    auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc{} || res.ptr != e || !std::isfinite(v))
        throw DataError("non-numeric cell '" + cell + "' at line " + std::to_string(line_no) +
                        ", column " + std::to_string(col_no));
    return v;
}

void validate(const Dataset& d) {
    if (d.n() == 0) throw DataError("dataset has no rows");
    if (d.n_feats() < 1) throw DataError("dataset has no feature columns");
    std::map<std::string, std::size_t> counts;
    for (const auto& l : d.labels) ++counts[l];
    if (counts.size() != 2)
        throw DataError("expected exactly 2 label values, found " + std::to_string(counts.size()));
    auto it = counts.find(d.minority_label);
    if (it == counts.end()) throw DataError("minority label '" + d.minority_label + "' not present");
    const std::size_t min_count = it->second;
    const std::size_t maj_count = d.n() - min_count;
    if (min_count > maj_count)
        throw DataError("declared minority label '" + d.minority_label + "' has " +
                        std::to_string(min_count) + " samples, more than the other class (" +
                        std::to_string(maj_count) + ")");
}

std::string rarer_label(const std::vector<std::string>& labels) {
    std::map<std::string, std::size_t> counts;
    for (const auto& l : labels) ++counts[l];
    // strictly rarer class; on a tie, the lexicographically smaller label
    std::string best;
    std::size_t best_count = SIZE_MAX;
    for (const auto& [lab, c] : counts)
        if (c < best_count) {
            best = lab;
            best_count = c;
        }
    return best;
}

}  // namespace

std::string Dataset::majority_label() const {
    for (const auto& l : labels)
        if (l != minority_label) return l;
    return "";
}

std::vector<std::size_t> Dataset::minority_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == minority_label) out.push_back(i);
    return out;
}

std::vector<std::size_t> Dataset::majority_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != minority_label) out.push_back(i);
    return out;
}

Dataset Dataset::subset(const std::vector<std::size_t>& rows) const {
    Dataset out;
    out.features = features.take_rows(rows);
    out.labels.reserve(rows.size());
    for (std::size_t i : rows) out.labels.push_back(labels[i]);
    out.minority_label = minority_label;
    out.feature_names = feature_names;
    out.label_name = label_name;
    out.label_col_pos = label_col_pos;
    return out;
}

Dataset load_csv(const std::string& path, const std::string& label_column,
                 const std::optional<std::string>& minority_label) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!trim(line).empty()) lines.push_back(line);
    }
    if (lines.size() < 2) throw DataError("CSV needs a header row and at least one data row: " + path);

    const std::vector<std::string> header = split_csv_line(lines[0]);
    const std::size_t ncols = header.size();
    if (ncols < 2) throw DataError("CSV needs at least one feature column and a label column");

    // label column: exact header-name match wins, otherwise a 0-based index
    std::size_t label_pos = ncols;
    for (std::size_t j = 0; j < ncols; ++j)
        if (header[j] == label_column) {
            label_pos = j;
            break;
        }
    if (label_pos == ncols) {
        std::size_t idx = 0;
        auto res = std::from_chars(label_column.data(), label_column.data() + label_column.size(), idx);
        if (res.ec == std::errc{} && res.ptr == label_column.data() + label_column.size() && idx < ncols)
            label_pos = idx;
        else
            throw DataError("label column '" + label_column + "' not found in header");
    }

    Dataset d;
    d.label_col_pos = label_pos;
    d.label_name = header[label_pos];
    for (std::size_t j = 0; j < ncols; ++j)
        if (j != label_pos) d.feature_names.push_back(header[j]);
    d.features = Matrix(lines.size() - 1, ncols - 1);
    d.labels.reserve(lines.size() - 1);

    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto cells = split_csv_line(lines[i]);
        if (cells.size() != ncols)
            throw DataError("line " + std::to_string(i + 1) + " has " + std::to_string(cells.size()) +
                            " cells, expected " + std::to_string(ncols));
        std::size_t fj = 0;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (j == label_pos) continue;
            d.features(i - 1, fj++) = parse_cell(cells[j], i + 1, j + 1);
        }
        d.labels.push_back(cells[label_pos]);
    }

    d.minority_label = minority_label ? *minority_label : rarer_label(d.labels);
    validate(d);
    return d;
}

Dataset dataset_from_parts(Matrix features, std::vector<std::string> labels,
                           const std::optional<std::string>& minority_label) {
    Dataset d;
    d.features = std::move(features);
    d.labels = std::move(labels);
    if (d.features.rows != d.labels.size())
        throw DataError("feature row count does not match label count");
    for (std::size_t j = 0; j < d.features.cols; ++j) d.feature_names.push_back("f" + std::to_string(j));
    d.label_name = "label";
    d.label_col_pos = d.features.cols;
    d.minority_label = minority_label ? *minority_label : rarer_label(d.labels);
    validate(d);
    return d;
}

std::string csv_string(const Dataset& d) {
    std::string out;
    const std::size_t ncols = d.n_feats() + 1;
    for (std::size_t j = 0, fj = 0; j < ncols; ++j) {
        if (j) out += ',';
        out += (j == d.label_col_pos) ? d.label_name : d.feature_names[fj++];
    }
    out += '\n';
    for (std::size_t i = 0; i < d.n(); ++i) {
        for (std::size_t j = 0, fj = 0; j < ncols; ++j) {
            if (j) out += ',';
            out += (j == d.label_col_pos) ? d.labels[i] : fmt_shortest(d.features(i, fj++));
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::string& path, const Dataset& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + path);
    out << csv_string(d);
}

Normalizer fit_normalizer(const Matrix& train) {
    Normalizer n;
    n.mins.assign(train.cols, 0.0);
    n.maxs.assign(train.cols, 0.0);
    for (std::size_t j = 0; j < train.cols; ++j) {
        double lo = train(0, j), hi = train(0, j);
        for (std::size_t i = 1; i < train.rows; ++i) {
            lo = std::min(lo, train(i, j));
            hi = std::max(hi, train(i, j));
        }
        n.mins[j] = lo;
        n.maxs[j] = hi;
    }
    return n;
}

Normalizer fit_normalizer(const Dataset& train) { return fit_normalizer(train.features); }

Matrix apply_normalizer(const Normalizer& norm, const Matrix& m) {
    Matrix out(m.rows, m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        const double range = norm.maxs[j] - norm.mins[j];
        for (std::size_t i = 0; i < m.rows; ++i) {
            double v = range > 0.0 ? (m(i, j) - norm.mins[j]) / range : 0.0;
            out(i, j) = std::clamp(v, 0.0, 1.0);
        }
    }
    return out;
}

Dataset apply_normalizer(const Normalizer& norm, const Dataset& d) {
    Dataset out = d;
    out.features = apply_normalizer(norm, d.features);
    return out;
}

Matrix invert_normalizer(const Normalizer& norm, const Matrix& m) {
    Matrix out(m.rows, m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        const double range = norm.maxs[j] - norm.mins[j];
        for (std::size_t i = 0; i < m.rows; ++i) out(i, j) = m(i, j) * range + norm.mins[j];
    }
    return out;
}

std::vector<std::size_t> FoldPlan::test_indices(std::size_t repeat, std::size_t fold) const {
    std::vector<std::size_t> out;
    const auto& a = assignments[repeat];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == fold) out.push_back(i);
    return out;
}

std::vector<std::size_t> FoldPlan::train_indices(std::size_t repeat, std::size_t fold) const {
    std::vector<std::size_t> out;
    const auto& a = assignments[repeat];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != fold) out.push_back(i);
    return out;
}

namespace {

void shuffle_indices(std::vector<std::size_t>& v, Rng& rng) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const std::size_t j = i + rng.uniform_index(v.size() - i);
        std::swap(v[i], v[j]);
    }
}

}  // namespace

FoldPlan stratified_folds(const Dataset& d, std::size_t repeats, std::size_t folds,
                          std::uint64_t seed) {
    if (repeats < 1 || folds < 1) throw DataError("repeats and folds must be >= 1");
    const auto min_idx_base = d.minority_indices();
    const auto maj_idx_base = d.majority_indices();
    if (folds > min_idx_base.size())
        throw DataError("folds (" + std::to_string(folds) + ") exceed minority count (" +
                        std::to_string(min_idx_base.size()) + ")");

    const std::size_t n = d.n(), m = min_idx_base.size();
    FoldPlan plan;
    plan.repeats = repeats;
    plan.folds = folds;
    plan.seed = seed;
    plan.assignments.assign(repeats, std::vector<std::size_t>(n, 0));

    for (std::size_t r = 0; r < repeats; ++r) {
        Rng rng(SeedMixer(seed).mix("stratified-folds").mix(std::uint64_t{r}).value());
        auto min_idx = min_idx_base;
        auto maj_idx = maj_idx_base;
        shuffle_indices(min_idx, rng);
        shuffle_indices(maj_idx, rng);
        // fold f gets floor-or-ceil shares of both the total and the minority,
        // which keeps fold sizes and minority proportions within one sample
        std::size_t mi = 0, ji = 0;
        for (std::size_t f = 0; f < folds; ++f) {
            const std::size_t min_f = m / folds + (f < m % folds ? 1 : 0);
            const std::size_t tot_f = n / folds + (f < n % folds ? 1 : 0);
            const std::size_t maj_f = tot_f - min_f;
            for (std::size_t t = 0; t < min_f; ++t) plan.assignments[r][min_idx[mi++]] = f;
            for (std::size_t t = 0; t < maj_f; ++t) plan.assignments[r][maj_idx[ji++]] = f;
        }
    }
    return plan;
}

std::pair<Dataset, Dataset> selection_split(const Dataset& d, double train_frac,
                                            double test_frac, std::uint64_t seed) {
    const auto min_idx_base = d.minority_indices();
    const auto maj_idx_base = d.majority_indices();
    const std::size_t m = min_idx_base.size();
    if (m < 2) throw DataError("minority class too small to stratify a selection split");

    auto part_counts = [&](std::size_t class_n) {
        auto tr = static_cast<std::size_t>(std::llround(static_cast<double>(class_n) * train_frac));
        auto te = static_cast<std::size_t>(std::llround(static_cast<double>(class_n) * test_frac));
        tr = std::max<std::size_t>(tr, 1);
        te = std::max<std::size_t>(te, 1);
        if (tr + te > class_n) throw DataError("class too small for the requested split fractions");
        return std::pair{tr, te};
    };
    const auto [min_tr, min_te] = part_counts(m);
    const auto [maj_tr, maj_te] = part_counts(maj_idx_base.size());

    Rng rng(SeedMixer(seed).mix("selection-split").value());
    auto min_idx = min_idx_base;
    auto maj_idx = maj_idx_base;
    shuffle_indices(min_idx, rng);
    shuffle_indices(maj_idx, rng);

    std::vector<std::size_t> train_rows(min_idx.begin(), min_idx.begin() + min_tr);
    train_rows.insert(train_rows.end(), maj_idx.begin(), maj_idx.begin() + maj_tr);
    std::vector<std::size_t> test_rows(min_idx.begin() + min_tr, min_idx.begin() + min_tr + min_te);
    test_rows.insert(test_rows.end(), maj_idx.begin() + maj_tr, maj_idx.begin() + maj_tr + maj_te);
    std::sort(train_rows.begin(), train_rows.end());
    std::sort(test_rows.begin(), test_rows.end());
    return {d.subset(train_rows), d.subset(test_rows)};
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open manifest: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw DataError(std::string("manifest parse error: ") + e.what());
    }
    if (!j.is_array()) throw DataError("manifest must be a JSON array");
    std::vector<ManifestEntry> out;
    for (const auto& e : j) {
        ManifestEntry m;
        if (!e.contains("name") || !e.contains("path"))
            throw DataError("manifest entries need 'name' and 'path'");
        m.name = e.at("name").get<std::string>();
        m.path = e.at("path").get<std::string>();
        if (e.contains("label_column")) {
            const auto& lc = e.at("label_column");
            m.label_column = lc.is_string() ? lc.get<std::string>() : std::to_string(lc.get<long long>());
        } else {
            m.label_column = "label";
        }
        if (e.contains("minority_label")) {
            const auto& ml = e.at("minority_label");
            m.minority_label = ml.is_string() ? ml.get<std::string>() : ml.dump();
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace prowras
