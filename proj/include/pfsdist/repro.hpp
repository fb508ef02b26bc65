#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "pfsdist/classify.hpp"
#include "pfsdist/format.hpp"

namespace pfsdist::repro {

/// One step of the delta sweep: two single-point sets with squared
/// memberships delta and delta - 0.1 (zero hesitance), compared under the
/// Euclidean and matrix measures, plus both score values.
struct DeltaSweepRow {
    double delta;
    double euclid;
    double proposed;
    double score_a;
    double score_b;
    double abs_score_a;
    double abs_score_b;
};

/// One method's distances over the eight benchmark case pairs.
struct CaseTableRow {
    std::string method_name;
    std::array<double, 8> values;
};

/// Full distance matrix and per-patient judgments for one application
/// dataset (patients x diagnoses, matrix measure).
struct ApplicationResult {
    int id = 0;
    std::vector<std::string> patients;
    std::vector<std::string> diagnoses;
    std::vector<std::vector<double>> matrix;
    std::vector<std::string> judgments;
};

/// A regenerated cell that disagrees with the recorded reference value
/// beyond tolerance. Mismatches are reported, never patched.
struct Discrepancy {
    std::string table;
    std::string row;
    std::string col;
    std::string reference;
    std::string computed;

    std::string line() const;  // "table,row,col,reference,computed"
};

/// Tolerance for distance cells. The reference tables print four decimals
/// and carry some arithmetic slack of their own, so this is looser than the
/// library's numeric accuracy.
inline constexpr double kCellTolerance = 0.002;

/// Score cells are exact rationals.
inline constexpr double kScoreTolerance = 1e-12;

std::vector<DeltaSweepRow> run_example1();
std::vector<CaseTableRow> run_example2(const std::filesystem::path& data_dir);
ApplicationResult run_application(int id, const std::filesystem::path& data_dir);

std::vector<Discrepancy> check_table1(const std::vector<DeltaSweepRow>& rows);
std::vector<Discrepancy> check_table2(const std::vector<DeltaSweepRow>& rows);
std::vector<Discrepancy> check_table4(const std::vector<CaseTableRow>& rows);
std::vector<Discrepancy> check_application(const ApplicationResult& result);

std::string emit_table(const std::vector<DeltaSweepRow>& rows, TableFormat format,
                       int decimals = 4);
std::string emit_table(const std::vector<CaseTableRow>& rows, TableFormat format,
                       int decimals = 4);
std::string emit_table(const ApplicationResult& result, TableFormat format,
                       int decimals = 4);

// Recorded reference values the checks compare against.
extern const std::array<double, 10> kReferenceSweepDeltas;
extern const std::array<double, 10> kReferenceSweepEuclid;
extern const std::array<double, 10> kReferenceSweepProposed;
extern const std::array<double, 10> kReferenceSweepScoreA;
extern const std::array<double, 10> kReferenceSweepScoreB;
extern const std::array<const char*, 7> kReferenceCaseMethods;
extern const std::array<std::array<double, 8>, 7> kReferenceCaseTable;
extern const std::array<std::array<double, 5>, 4> kReferenceAppMatrix1;
extern const std::array<std::array<double, 5>, 4> kReferenceAppMatrix2;
extern const std::array<std::array<double, 5>, 4> kReferenceAppMatrix3;
extern const std::array<const char*, 4> kReferenceAppJudgments1;
extern const std::array<const char*, 4> kReferenceAppJudgments2;
extern const std::array<const char*, 4> kReferenceAppJudgments3;

}  // namespace pfsdist::repro
