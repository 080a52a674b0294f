//! Command-line front end: configuration, tabular output and the
//! verification report.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod table;
pub mod verify;

use std::io::Write;

pub use commands::{cmd_coherent, cmd_spectrum, cmd_wavefunction};
pub use config::{ConfigError, Format, RunConfig, Settings};
pub use table::{Cell, Table};
pub use verify::{cmd_verify, Report};

pub enum Output {
    Table(Table),
    Report(Report),
}

impl Output {
    pub fn write<W: Write>(&self, format: Format, mut out: W) -> std::io::Result<()> {
        match (self, format) {
            (Output::Table(t), Format::Csv) => t.write_csv(out).map_err(std::io::Error::other),
            (Output::Report(r), Format::Csv) => r.write_csv(out).map_err(std::io::Error::other),
            (Output::Table(t), Format::Json) => writeln!(out, "{:#}", t.to_json()),
            (Output::Report(r), Format::Json) => writeln!(out, "{:#}", r.to_json()),
        }
    }

    pub fn to_bytes(&self, format: Format) -> Vec<u8> {
        let mut buf = Vec::new();
        self.write(format, &mut buf).expect("writing to memory");
        buf
    }
}
