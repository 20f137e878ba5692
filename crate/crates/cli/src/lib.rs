//! Text formats shared by the command-line tools and their tests.

pub mod formats;
