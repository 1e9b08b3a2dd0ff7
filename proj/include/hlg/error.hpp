/*
   Copyright 2026 The hlg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HLG_ERROR_HPP
#define HLG_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hlg {

enum class ErrorKind {
    DivisionByZero,
    ModulusMismatch,
    NotPrime,
    ArityMismatch,
    ExponentOverflow,
    TermBudgetExceeded,
    Singular,
    InvalidInput,
    ParseError,
    ModeUnavailable,
    IdentityBase,
    DegenerateInput,
    DegenerateConic,
    IterationCapExceeded,
    RetriesExhausted,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ModulusMismatch: return "ModulusMismatch";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::ExponentOverflow: return "ExponentOverflow";
        case ErrorKind::TermBudgetExceeded: return "TermBudgetExceeded";
        case ErrorKind::Singular: return "Singular";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ModeUnavailable: return "ModeUnavailable";
        case ErrorKind::IdentityBase: return "IdentityBase";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::DegenerateConic: return "DegenerateConic";
        case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
        case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    }
    return "Unknown";
}

/// Base of every exception thrown by the library. `kind()` is stable and is
/// what the command-line front end maps onto exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Thrown when a polynomial would grow past the configured term budget.
class TermBudgetExceeded : public Error {
public:
    TermBudgetExceeded(std::size_t partial, std::size_t budget)
        : Error(ErrorKind::TermBudgetExceeded,
                "polynomial reached " + std::to_string(partial) + " terms (budget " +
                    std::to_string(budget) + ")"),
          partial_(partial),
          budget_(budget) {}

    std::size_t partial_terms() const noexcept { return partial_; }
    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t partial_;
    std::size_t budget_;
};

}  // namespace hlg

#endif  // HLG_ERROR_HPP
