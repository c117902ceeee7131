//---------------------------------------------------------------------------//
// Copyright tcbm contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/cli.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcbm::cli
{
//---------------------------------------------------------------------------//
enum ExitCode : int
{
    ok = 0,
    check_failed = 1,
    invalid_input = 2,
    numerical_error = 3,
};

//! Run the command line \c args (without the program name)
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

//---------------------------------------------------------------------------//
}  // namespace tcbm::cli
