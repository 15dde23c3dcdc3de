#pragma once

#include <deque>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace nvq {

/// Error with a stable machine-readable code ("NotAssociative", "ParseError", ...)
/// in addition to the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// One axiom verdict inside an AxiomReport. Carries the first witness only,
/// plus the total violation count. Informational verdicts are reported but do
/// not affect all_pass().
struct Verdict {
    std::string axiom;
    bool pass = true;
    bool informational = false;
    long long violations = 0;
    std::string witness;

    void fail(const std::string& w) {
        if (pass) {
            pass = false;
            witness = w;
        }
        ++violations;
    }
};

class AxiomReport {
public:
    /// The returned reference stays valid across later add() calls.
    Verdict& add(std::string axiom, bool informational = false) {
        verdicts_.push_back(Verdict{std::move(axiom), true, informational, 0, {}});
        return verdicts_.back();
    }

    bool all_pass() const {
        for (const auto& v : verdicts_)
            if (!v.informational && !v.pass) return false;
        return true;
    }

    const Verdict* find(std::string_view axiom) const {
        for (const auto& v : verdicts_)
            if (v.axiom == axiom) return &v;
        return nullptr;
    }

    const std::deque<Verdict>& verdicts() const { return verdicts_; }

    void append(const AxiomReport& other) {
        for (const auto& v : other.verdicts_) verdicts_.push_back(v);
    }

private:
    std::deque<Verdict> verdicts_;
};

}  // namespace nvq
