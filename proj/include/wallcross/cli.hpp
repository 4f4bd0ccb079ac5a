#pragma once

#include <wallcross/torus_model.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace wallcross {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;

// "spheres:n", "cp2:n", or a model file path.
TorusModel load_model(const std::string &specifier);

/// Runs one subcommand (args exclude the program name).
///
///   pair    --model M --class E [--path p0:dir | --plan FILE | --variant V]
///   volume  --model M --group torus|weyl [--path | --plan | --variant] [--float]
///   walls   --model M [--xi a,b,...]
///   plan    --model M [--path p0:dir | --variant V] [--out FILE]
///   ring    --space S
///   segre   --space S [--order N]
int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace wallcross
