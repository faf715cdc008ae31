#ifndef PUSHLAB_ERROR_HPP
#define PUSHLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pushlab
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Bad input to a constructor or an operation precondition.
    class GraphError : public Error
    {
        public:
            using Error::Error;
    };

    /// Malformed graph6 / digraph6 text.
    class FormatError : public Error
    {
        public:
            using Error::Error;
    };

    /// An exhaustive search would exceed its explicit size budget.
    class BudgetError : public Error
    {
        public:
            using Error::Error;
    };
}

#endif
