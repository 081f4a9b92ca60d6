//! Command-line front end for `freelnd`: an expression language for
//! polynomials in `X`, `Y` and the subcommands behind the `freelnd` binary.

pub mod commands;
pub mod expr;
