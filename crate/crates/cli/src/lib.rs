//! Front end for the `logmod` command: input documents, result trees and
//! their verification.

pub mod commands;
pub mod doc;
pub mod encode;
pub mod generate;
pub mod tree;
pub mod verify;
