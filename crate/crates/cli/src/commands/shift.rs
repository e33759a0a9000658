use catwva::phase_dist::{find_peaks, weak_value, PeakReport, DEFAULT_COARSE_NODES, DEFAULT_WINDOW};
use catwva::ProtocolParams;
use clap::Args;

use super::{linspace, parse_atoms};
use crate::error::{CliError, CliResult};
use crate::output::{ensure_dir, write_table, Meta, Table};
use crate::Common;

#[derive(Debug, Args)]
pub struct ShiftArgs {
    #[command(flatten)]
    pub common: Common,

    /// Comma-separated atom numbers.
    #[arg(long, default_value = "10,100")]
    pub n: String,

    #[arg(long, default_value = "pi/100", allow_hyphen_values = true)]
    pub omega: String,

    /// Explicit post-selection angles; replaces the uniform sweep.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_list: Option<String>,

    #[arg(long, default_value = "pi/100", allow_hyphen_values = true)]
    pub gamma_min: String,

    #[arg(long, default_value = "pi/2", allow_hyphen_values = true)]
    pub gamma_max: String,

    /// Points in the uniform sweep.
    #[arg(long, default_value_t = 50)]
    pub n_gamma: usize,

    /// Angle at which the summary amplification factor is reported.
    #[arg(long, default_value = "pi/100", allow_hyphen_values = true)]
    pub gamma_ref: String,
}

fn peaks(n: u32, omega: f64, gamma: f64) -> CliResult<PeakReport> {
    Ok(find_peaks(&ProtocolParams::equatorial(n, omega, gamma)?, DEFAULT_WINDOW, DEFAULT_COARSE_NODES)?)
}

pub fn run(args: &ShiftArgs) -> CliResult<()> {
    let c = &args.common;
    let atoms = parse_atoms(&args.n)?;
    let omega = c.angle(&args.omega, "omega")?;
    let gammas = match &args.gamma_list {
        Some(l) => c.angle_list(l, "gamma-list")?,
        None => {
            if args.n_gamma == 0 {
                return Err(CliError::Param("--n-gamma must be positive".into()));
            }
            linspace(c.angle(&args.gamma_min, "gamma-min")?, c.angle(&args.gamma_max, "gamma-max")?, args.n_gamma)
        }
    };
    let gamma_ref = c.angle(&args.gamma_ref, "gamma-ref")?;

    let mut sweeps = Vec::new();
    let mut summary = Table::new(&["N", "gamma", "left_peak_phi", "scaled_shift", "n_peaks"]);
    for &n in &atoms {
        let mut t = Table::new(&["gamma", "left_peak_phi", "scaled_shift", "n_peaks", "weak_value"]);
        for &g in &gammas {
            let r = peaks(n, omega, g)?;
            let a = weak_value(g).map_or(f64::INFINITY, |w| w.a);
            t.push(vec![g.into(), r.left_peak_phi.into(), r.scaled_shift.into(), r.n_peaks.into(), a.into()]);
        }
        let r = peaks(n, omega, gamma_ref)?;
        summary.push(vec![n.into(), gamma_ref.into(), r.left_peak_phi.into(), r.scaled_shift.into(), r.n_peaks.into()]);
        println!("N={n:<4} gamma={gamma_ref:.6}  |phi_peak|/Omega = {:.6}  ({} peak(s))", r.scaled_shift, r.n_peaks);
        sweeps.push((n, t));
    }

    ensure_dir(&c.out)?;
    let mut base = Meta::new("shift");
    base.num("omega", omega).push("window", "[-pi/2, pi/2]").push("coarse_nodes", DEFAULT_COARSE_NODES);
    for (n, t) in &sweeps {
        let meta = base.with("N", n);
        let path = write_table(&c.out, &format!("shift_N{n}"), &meta, t, c.format)?;
        println!("N={n}: {} angles -> {}", gammas.len(), path.display());
    }
    let path = write_table(&c.out, "shift_summary", &base, &summary, c.format)?;
    println!("summary -> {}", path.display());
    Ok(())
}
