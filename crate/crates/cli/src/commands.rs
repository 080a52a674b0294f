use defect_oscillator::coherent::{coherent_evolved, coherent_norm, EvolvedCoherentState};
use defect_oscillator::defect::{
    bargmann_index, centrifugal_parameter, energy_squared, shift_parameter, QuantumNumbers,
};
use defect_oscillator::radial::{overlap, Form, SturmianMode};
use defect_oscillator::su11::CoherentParam;

use crate::config::RunConfig;
use crate::table::{Cell, Table};

pub const SPECTRUM_COLUMNS: [&str; 10] = [
    "kind",
    "component",
    "n_r",
    "l",
    "lambda_centrifugal",
    "lambda_shift",
    "k_bargmann",
    "e_squared",
    "e_plus",
    "e_minus",
];

pub const WAVEFUNCTION_COLUMNS: [&str; 9] = [
    "record",
    "component",
    "n_r",
    "l",
    "k_bargmann",
    "rho",
    "f",
    "chi",
    "norm",
];

pub const COHERENT_COLUMNS: [&str; 9] = [
    "component",
    "l",
    "k_bargmann",
    "tau",
    "rho",
    "re_chi",
    "im_chi",
    "abs2_chi",
    "norm",
];

fn mode_cells(qn: &QuantumNumbers) -> [Cell; 3] {
    [
        Cell::text(qn.component.name()),
        Cell::Int(i64::from(qn.n_r)),
        Cell::Int(i64::from(qn.l)),
    ]
}

pub fn cmd_spectrum(cfg: &RunConfig) -> Table {
    let mut table = Table::new(&SPECTRUM_COLUMNS);
    for qn in cfg.quantum_numbers() {
        let centrifugal = centrifugal_parameter(&cfg.defect, &qn);
        let level = energy_squared(&cfg.defect, &qn);
        let (e_plus, e_minus) = match level.branches() {
            Some((p, m)) => (Cell::Real(p), Cell::Real(m)),
            None => (Cell::Empty, Cell::Empty),
        };
        let mut row = vec![Cell::text(cfg.defect.kind().name())];
        row.extend(mode_cells(&qn));
        row.extend([
            Cell::Real(centrifugal),
            Cell::Real(shift_parameter(&cfg.defect, &qn)),
            Cell::Real(bargmann_index(centrifugal)),
            Cell::Real(level.e_squared),
            e_plus,
            e_minus,
        ]);
        table.push(row);
    }
    table
}

/// Samples of `F` and `χ` per mode, each followed by a `norm` record holding
/// `∫F² dρ`.
pub fn cmd_wavefunction(cfg: &RunConfig) -> defect_oscillator::Result<Table> {
    let mut table = Table::new(&WAVEFUNCTION_COLUMNS);
    let grid = cfg.rho_grid();
    for qn in cfg.quantum_numbers() {
        let f = SturmianMode::for_state(&cfg.defect, &qn, Form::F);
        let chi = f.with_form(Form::Chi);
        let k = Cell::Real(f.k());
        for &rho in &grid {
            let mut row = vec![Cell::text("sample")];
            row.extend(mode_cells(&qn));
            row.extend([
                k.clone(),
                Cell::Real(rho),
                Cell::Real(f.eval(rho)),
                Cell::Real(chi.eval(rho)),
                Cell::Empty,
            ]);
            table.push(row);
        }
        let mut footer = vec![Cell::text("norm")];
        footer.extend(mode_cells(&qn));
        footer.extend([
            k,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Real(overlap(&f, &f)?),
        ]);
        table.push(footer);
    }
    Ok(table)
}

/// `χ(ρ, τ)` of the ground-state family of each `(component, l)` over the
/// `(τ, ρ)` grid; `norm` is `∫|χ|²ρ dρ` at that `τ`.
pub fn cmd_coherent(cfg: &RunConfig) -> defect_oscillator::Result<Table> {
    let mut table = Table::new(&COHERENT_COLUMNS);
    let base = CoherentParam::new(cfg.xi)?;
    let rho_grid = cfg.rho_grid();
    let tau_grid = cfg.tau_grid();
    for &component in &cfg.components {
        for l in 0..=cfg.l_max as i32 {
            let qn = QuantumNumbers::new(0, l, cfg.k_z, component);
            let k = bargmann_index(centrifugal_parameter(&cfg.defect, &qn));
            let start =
                EvolvedCoherentState::new(base, k, cfg.defect.m_omega(), 0.0, cfg.defect.hbar())?;
            for &tau in &tau_grid {
                let state = start.at(tau);
                let norm = coherent_norm(state.xi_tau(), k, state.m_omega)?;
                for &rho in &rho_grid {
                    let value = coherent_evolved(&state, rho)?;
                    table.push(vec![
                        Cell::text(component.name()),
                        Cell::Int(i64::from(l)),
                        Cell::Real(k),
                        Cell::Real(tau),
                        Cell::Real(rho),
                        Cell::Real(value.re),
                        Cell::Real(value.im),
                        Cell::Real(value.norm_sqr()),
                        Cell::Real(norm),
                    ]);
                }
            }
        }
    }
    Ok(table)
}
