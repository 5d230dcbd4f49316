#pragma once

// Command-line front end. Subcommands:
//   po-table          periodic-orbit data at E = 1
//   bif-diagram       polygon angular momenta across an alpha range
//   trace             semiclassical oscillating level density
//   spectrum          quantum eigenvalues
//   fourier           Fourier transform of the quantum level density
//   compare           quantum vs semiclassical oscillating densities
//   catastrophe-demo  cubic endpoint integral, direct vs Airy form
//
// Output is CSV (default) or JSON with a metadata header carrying the
// version, the full configuration, and a config digest. Exit codes:
// 0 success, 1 usage error, 2 runtime failure.

namespace rpl {

inline constexpr const char* kCliVersion = "0.1.0";

int run_cli(int argc, const char* const* argv);

}  // namespace rpl
