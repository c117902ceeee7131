//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tcbm/errors.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace tcbm
{
//---------------------------------------------------------------------------//
//! Invalid parameters or arguments outside an operation's domain.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! A numerical procedure failed to reach its stated accuracy.
class NumericalError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Request would allocate an unreasonable amount of work or memory.
class ResourceError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Chi-square test has too few usable cells.
class DegenerateTestError : public DomainError
{
  public:
    using DomainError::DomainError;
};

namespace detail
{
inline void require(bool condition, std::string const& message)
{
    if (!condition)
    {
        throw DomainError(message);
    }
}
}  // namespace detail

//---------------------------------------------------------------------------//
}  // namespace tcbm
