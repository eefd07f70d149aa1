#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace seb {

struct Failure {
    std::string identity;  // which claim failed
    std::string indices;   // where, e.g. "(n,k,j)=(5,2,3)"
    std::string expected;
    std::string actual;
};

/// Outcome of one verification suite: a counter of checks performed plus
/// the list of counterexamples found (empty means the suite passed).
class Report {
public:
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    void check(bool ok, const std::string& identity, const std::string& indices,
               std::string expected = "", std::string actual = "") {
        ++checks_;
        if (!ok) failures_.push_back({identity, indices, std::move(expected), std::move(actual)});
    }

    template <typename T>
    void check_eq(const T& expected, const T& actual, const std::string& identity,
                  const std::string& indices) {
        std::ostringstream e, a;
        if (!(expected == actual)) {
            e << expected;
            a << actual;
        }
        check(expected == actual, identity, indices, e.str(), a.str());
    }

    void note(std::string text) { notes_.push_back(std::move(text)); }

    void merge(const Report& other) {
        checks_ += other.checks_;
        failures_.insert(failures_.end(), other.failures_.begin(), other.failures_.end());
        notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
        elapsed_seconds += other.elapsed_seconds;
    }

    bool ok() const { return failures_.empty(); }
    long checks_run() const { return checks_; }
    const std::string& suite() const { return suite_; }
    const std::vector<Failure>& failures() const { return failures_; }
    const std::vector<std::string>& notes() const { return notes_; }

    void print(std::ostream& os, bool verbose = false) const {
        os << (ok() ? "PASS" : "FAIL") << " " << suite_ << ": " << checks_ << " checks";
        if (!ok()) os << ", " << failures_.size() << " failures";
        if (elapsed_seconds > 0) {
            os << " [" << elapsed_seconds << "s]";
        }
        os << "\n";
        std::size_t shown = 0;
        for (const auto& f : failures_) {
            if (!verbose && shown >= 10) {
                os << "  ... " << (failures_.size() - shown) << " more failures\n";
                break;
            }
            os << "  FAIL " << f.identity << " at " << f.indices;
            if (!f.expected.empty() || !f.actual.empty())
                os << ": expected " << f.expected << ", got " << f.actual;
            os << "\n";
            ++shown;
        }
        for (const auto& n : notes_) os << "  note: " << n << "\n";
    }

    double elapsed_seconds = 0;

private:
    std::string suite_;
    long checks_ = 0;
    std::vector<Failure> failures_;
    std::vector<std::string> notes_;
};

}  // namespace seb
