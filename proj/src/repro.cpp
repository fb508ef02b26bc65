#include "pfsdist/repro.hpp"

#include <cmath>

#include "pfsdist/distance.hpp"
#include "pfsdist/io.hpp"

namespace pfsdist::repro {

const std::array<double, 10> kReferenceSweepDeltas = {
    0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

const std::array<double, 10> kReferenceSweepEuclid = {
    0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1};

const std::array<double, 10> kReferenceSweepProposed = {
    0.1048, 0.1154, 0.1259, 0.1348, 0.1400,
    0.1400, 0.1348, 0.1259, 0.1154, 0.1048};

const std::array<double, 10> kReferenceSweepScoreA = {
    -0.8, -0.6, -0.4, -0.2, 0.0, 0.2, 0.4, 0.6, 0.8, 1.0};

const std::array<double, 10> kReferenceSweepScoreB = {
    -1.0, -0.8, -0.6, -0.4, -0.2, 0.0, 0.2, 0.4, 0.6, 0.8};

const std::array<const char*, 7> kReferenceCaseMethods = {
    "ifs-hamming", "ifs-euclid", "pfs-hamming", "pfs-euclid",
    "chen(beta=1)", "chen(beta=2)", "matrix"};

const std::array<std::array<double, 8>, 7> kReferenceCaseTable = {{
    {0.1464, 0.1351, 0.1170, 0.1350, 0.1161, 0.1500, 0.1500, 0.1500},
    {0.1298, 0.1180, 0.1110, 0.1261, 0.1009, 0.1323, 0.1323, 0.1414},
    {0.1500, 0.1400, 0.1500, 0.1500, 0.1500, 0.0825, 0.1275, 0.1250},
    {0.1323, 0.1217, 0.1414, 0.1414, 0.1323, 0.0740, 0.1186, 0.1170},
    {0.1500, 0.1400, 0.1500, 0.1500, 0.1500, 0.0825, 0.1275, 0.1250},
    {0.1323, 0.1217, 0.1414, 0.1414, 0.1323, 0.0740, 0.1186, 0.1170},
    {0.1801, 0.1756, 0.1417, 0.1517, 0.1578, 0.0746, 0.0829, 0.0982},
}};

const std::array<std::array<double, 5>, 4> kReferenceAppMatrix1 = {{
    {0.2698, 0.2235, 0.2446, 0.5878, 0.6324},
    {0.2486, 0.2143, 0.2979, 0.0673, 0.5051},
    {0.2605, 0.4448, 0.1324, 0.4853, 0.5975},
    {0.1727, 0.2075, 0.3118, 0.5085, 0.5256},
}};

const std::array<std::array<double, 5>, 4> kReferenceAppMatrix2 = {{
    {0.5457, 0.4593, 0.5213, 0.4847, 0.6497},
    {0.2224, 0.5103, 0.2680, 0.3987, 0.4768},
    {0.6160, 0.6561, 0.5438, 0.3955, 0.6716},
    {0.5058, 0.4265, 0.4444, 0.4393, 0.5723},
}};

const std::array<std::array<double, 5>, 4> kReferenceAppMatrix3 = {{
    {0.1930, 0.3979, 0.2707, 0.6404, 0.6942},
    {0.4230, 0.3648, 0.2882, 0.1181, 0.3191},
    {0.3558, 0.4174, 0.0996, 0.4498, 0.5463},
    {0.1658, 0.2727, 0.3270, 0.4664, 0.5125},
}};

const std::array<const char*, 4> kReferenceAppJudgments1 = {
    "Malaria", "Stomach problem", "Typhoid", "Viral fever"};

const std::array<const char*, 4> kReferenceAppJudgments2 = {
    "Malaria", "Viral fever", "Stomach problem", "Malaria"};

const std::array<const char*, 4> kReferenceAppJudgments3 = {
    "Stress", "Spinal problem", "Vision problem", "Stress"};

std::string Discrepancy::line() const {
    return table + "," + row + "," + col + "," + reference + "," + computed;
}

namespace {

PfsSet sweep_set(const std::string& name, int mu2_tenths, int nu2_tenths) {
    const double mu = std::sqrt(mu2_tenths / 10.0);
    const double nu = std::sqrt(nu2_tenths / 10.0);
    return PfsSet(name, {PfsElement("x", mu, nu)});
}

void push_cell(std::vector<Discrepancy>& out, const std::string& table,
               const std::string& row, const std::string& col,
               double reference, double computed, double tolerance) {
    if (std::abs(reference - computed) > tolerance) {
        out.push_back({table, row, col, format_fixed(reference, 4),
                       format_fixed(computed, 4)});
    }
}

}  // namespace

std::vector<DeltaSweepRow> run_example1() {
    std::vector<DeltaSweepRow> rows;
    rows.reserve(10);
    for (int k = 1; k <= 10; ++k) {
        const PfsSet a = sweep_set("A", k, 10 - k);
        const PfsSet b = sweep_set("B", k - 1, 11 - k);
        DeltaSweepRow row;
        row.delta = k / 10.0;
        row.euclid = d_euclid_pfs_norm(a, b);
        row.proposed = d_matrix(a, b);
        row.score_a = score_pfs(a[0]);
        row.score_b = score_pfs(b[0]);
        row.abs_score_a = std::abs(row.score_a);
        row.abs_score_b = std::abs(row.score_b);
        rows.push_back(row);
    }
    return rows;
}

std::vector<CaseTableRow> run_example2(const std::filesystem::path& data_dir) {
    const Dataset cases = load_dataset(data_dir / "example2_cases.json");

    struct Method {
        const char* name;
        double (*fn)(const PfsSet&, const PfsSet&);
    };
    const Method methods[] = {
        {"ifs-hamming", d_hamming_ifs_norm},
        {"ifs-euclid", d_euclid_ifs_norm},
        {"pfs-hamming", d_hamming_pfs_norm},
        {"pfs-euclid", d_euclid_pfs_norm},
        {"chen(beta=1)", [](const PfsSet& a, const PfsSet& b) { return d_chen_norm(a, b, 1.0); }},
        {"chen(beta=2)", [](const PfsSet& a, const PfsSet& b) { return d_chen_norm(a, b, 2.0); }},
        {"matrix", d_matrix},
    };

    std::vector<CaseTableRow> rows;
    rows.reserve(7);
    for (const Method& m : methods) {
        CaseTableRow row;
        row.method_name = m.name;
        for (int c = 0; c < 8; ++c) {
            const PfsSet& a = cases.find("A" + std::to_string(c + 1));
            const PfsSet& b = cases.find("B" + std::to_string(c + 1));
            row.values[static_cast<std::size_t>(c)] = m.fn(a, b);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ApplicationResult run_application(int id, const std::filesystem::path& data_dir) {
    if (id < 1 || id > 3) {
        throw RangeError("run_application: id " + std::to_string(id) +
                         " outside 1..3");
    }
    const std::string prefix = "app" + std::to_string(id);
    const Dataset patients = load_dataset(data_dir / (prefix + "_patients.json"));
    const Dataset diagnoses = load_dataset(data_dir / (prefix + "_diagnoses.json"));

    PatternLibrary library(diagnoses.sets);
    const auto results = classify_batch(library, patients.sets,
                                        DistanceMethod::matrix());

    ApplicationResult out;
    out.id = id;
    for (const auto& d : diagnoses.sets) out.diagnoses.push_back(d.name());
    for (const auto& r : results) {
        out.patients.push_back(r.sample_name);
        std::vector<double> row;
        row.reserve(r.distances.size());
        for (const auto& [name, value] : r.distances) row.push_back(value);
        out.matrix.push_back(std::move(row));
        out.judgments.push_back(r.winner_name());
    }
    return out;
}

std::vector<Discrepancy> check_table1(const std::vector<DeltaSweepRow>& rows) {
    std::vector<Discrepancy> out;
    for (std::size_t i = 0; i < rows.size() && i < 10; ++i) {
        const std::string row_name = format_fixed(rows[i].delta, 1);
        push_cell(out, "table1", row_name, "euclidean",
                  kReferenceSweepEuclid[i], rows[i].euclid, kCellTolerance);
        push_cell(out, "table1", row_name, "proposed",
                  kReferenceSweepProposed[i], rows[i].proposed, kCellTolerance);
    }
    return out;
}

std::vector<Discrepancy> check_table2(const std::vector<DeltaSweepRow>& rows) {
    std::vector<Discrepancy> out;
    for (std::size_t i = 0; i < rows.size() && i < 10; ++i) {
        const std::string row_name = format_fixed(rows[i].delta, 1);
        push_cell(out, "table2", row_name, "score_a",
                  kReferenceSweepScoreA[i], rows[i].score_a, kScoreTolerance);
        push_cell(out, "table2", row_name, "score_b",
                  kReferenceSweepScoreB[i], rows[i].score_b, kScoreTolerance);
        push_cell(out, "table2", row_name, "abs_score_a",
                  std::abs(kReferenceSweepScoreA[i]), rows[i].abs_score_a,
                  kScoreTolerance);
        push_cell(out, "table2", row_name, "abs_score_b",
                  std::abs(kReferenceSweepScoreB[i]), rows[i].abs_score_b,
                  kScoreTolerance);
    }
    return out;
}

std::vector<Discrepancy> check_table4(const std::vector<CaseTableRow>& rows) {
    std::vector<Discrepancy> out;
    for (std::size_t r = 0; r < rows.size() && r < 7; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            push_cell(out, "table4", rows[r].method_name,
                      "case" + std::to_string(c + 1),
                      kReferenceCaseTable[r][c], rows[r].values[c],
                      kCellTolerance);
        }
    }
    return out;
}

std::vector<Discrepancy> check_application(const ApplicationResult& result) {
    const auto& reference_matrix =
        result.id == 1 ? kReferenceAppMatrix1
        : result.id == 2 ? kReferenceAppMatrix2
                         : kReferenceAppMatrix3;
    const auto& reference_judgments =
        result.id == 1 ? kReferenceAppJudgments1
        : result.id == 2 ? kReferenceAppJudgments2
                         : kReferenceAppJudgments3;
    const std::string table = "app" + std::to_string(result.id);

    std::vector<Discrepancy> out;
    for (std::size_t r = 0; r < result.matrix.size() && r < 4; ++r) {
        for (std::size_t c = 0; c < result.matrix[r].size() && c < 5; ++c) {
            push_cell(out, table, result.patients[r], result.diagnoses[c],
                      reference_matrix[r][c], result.matrix[r][c],
                      kCellTolerance);
        }
        if (result.judgments[r] != reference_judgments[r]) {
            out.push_back({table, result.patients[r], "judgment",
                           reference_judgments[r], result.judgments[r]});
        }
    }
    return out;
}

std::string emit_table(const std::vector<DeltaSweepRow>& rows, TableFormat format,
                       int decimals) {
    const std::vector<std::string> header = {
        "delta", "euclidean", "proposed", "score_a", "score_b",
        "abs_score_a", "abs_score_b"};
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& r : rows) {
        cells.push_back({format_fixed(r.delta, 1),
                         format_fixed(r.euclid, decimals),
                         format_fixed(r.proposed, decimals),
                         format_fixed(r.score_a, decimals),
                         format_fixed(r.score_b, decimals),
                         format_fixed(r.abs_score_a, decimals),
                         format_fixed(r.abs_score_b, decimals)});
    }
    return render_table(header, cells, format);
}

std::string emit_table(const std::vector<CaseTableRow>& rows, TableFormat format,
                       int decimals) {
    std::vector<std::string> header = {"method"};
    for (int c = 1; c <= 8; ++c) header.push_back("case" + std::to_string(c));
    std::vector<std::vector<std::string>> cells;
    cells.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<std::string> row = {r.method_name};
        for (double v : r.values) row.push_back(format_fixed(v, decimals));
        cells.push_back(std::move(row));
    }
    return render_table(header, cells, format);
}

std::string emit_table(const ApplicationResult& result, TableFormat format,
                       int decimals) {
    std::vector<std::string> header = {"patient"};
    header.insert(header.end(), result.diagnoses.begin(), result.diagnoses.end());
    header.push_back("judgment");
    std::vector<std::vector<std::string>> cells;
    cells.reserve(result.patients.size());
    for (std::size_t r = 0; r < result.patients.size(); ++r) {
        std::vector<std::string> row = {result.patients[r]};
        for (double v : result.matrix[r]) row.push_back(format_fixed(v, decimals));
        row.push_back(result.judgments[r]);
        cells.push_back(std::move(row));
    }
    return render_table(header, cells, format);
}

}  // namespace pfsdist::repro
