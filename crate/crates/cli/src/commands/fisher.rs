use std::f64::consts::FRAC_PI_2;

use catwva::fisher_info::{fisher_report, numeric};
use catwva::ProtocolParams;
use clap::Args;

use crate::error::{CliError, CliResult};
use crate::output::{ensure_dir, fmt_num, write_table, Meta, Table};
use crate::Common;

#[derive(Debug, Args)]
pub struct FisherArgs {
    #[command(flatten)]
    pub common: Common,

    /// Number of atoms N = 2j.
    #[arg(long, default_value_t = 100)]
    pub n: u32,

    #[arg(long, default_value = "pi/100", allow_hyphen_values = true)]
    pub omega: String,

    /// Explicit post-selection angles; replaces gamma_k = (pi/2) k / n_gamma.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma_list: Option<String>,

    #[arg(long, default_value_t = 100)]
    pub n_gamma: usize,

    /// Re-derive I by finite differences of the state and F_p from p(Omega).
    #[arg(long)]
    pub check: bool,
}

/// Accepted relative deviations of the finite-difference checks.
const QFI_CHECK_TOL: f64 = 1e-4;
const FP_CHECK_TOL: f64 = 1e-5;

/// Relative deviation with an absolute floor, so that F_p ~ 0 at gamma = pi/4
/// is judged against the scale N rather than against rounding noise.
fn deviation(fd: f64, closed: f64, scale: f64) -> f64 {
    (fd - closed).abs() / closed.abs().max(1e-9 * scale)
}

pub fn run(args: &FisherArgs) -> CliResult<()> {
    let c = &args.common;
    let omega = c.angle(&args.omega, "omega")?;
    let gammas = match &args.gamma_list {
        Some(l) => c.angle_list(l, "gamma-list")?,
        None => {
            if args.n_gamma == 0 {
                return Err(CliError::Param("--n-gamma must be positive".into()));
            }
            (1..=args.n_gamma).map(|k| FRAC_PI_2 * (k as f64 / args.n_gamma as f64)).collect()
        }
    };

    let mut t = Table::new(&["gamma", "I", "p", "F_p", "pI", "pI_plus_F_p"]);
    let (mut dev_i, mut dev_f) = (0.0f64, 0.0f64);
    let mut i_joint = 0.0;
    for &g in &gammas {
        let r = fisher_report(args.n, omega, g)?;
        i_joint = r.i_joint;
        let pi = r.p * r.i_postselected;
        t.push(vec![g.into(), r.i_postselected.into(), r.p.into(), r.f_post.into(), pi.into(), (pi + r.f_post).into()]);
        if args.check {
            let params = ProtocolParams::equatorial(args.n, omega, g)?;
            let scale = args.n as f64;
            let fd_i = numeric::cat_qfi(&params, numeric::QFI_STEP)?;
            let fd_f = numeric::classical_fisher(&params, numeric::PROB_STEP)?;
            dev_i = dev_i.max(deviation(fd_i, r.i_postselected, scale));
            dev_f = dev_f.max(deviation(fd_f, r.f_post, scale));
        }
    }

    ensure_dir(&c.out)?;
    let mut meta = Meta::new("fisher");
    meta.push("N", args.n).num("omega", omega).num("I_joint", i_joint);
    if args.check {
        meta.num("check_max_rel_dev_I", dev_i).num("check_max_rel_dev_F_p", dev_f);
    }
    let path = write_table(&c.out, &format!("fisher_N{}", args.n), &meta, &t, c.format)?;
    println!("N={} omega={:.6}: I_joint = {} ; {} angles -> {}", args.n, omega, fmt_num(i_joint), gammas.len(), path.display());

    if args.check {
        println!("check: max relative deviation I = {dev_i:.3e} (tol {QFI_CHECK_TOL:e}), F_p = {dev_f:.3e} (tol {FP_CHECK_TOL:e})");
        if !(dev_i <= QFI_CHECK_TOL && dev_f <= FP_CHECK_TOL) {
            return Err(CliError::Check(format!("finite differences deviate: I {dev_i:.3e}, F_p {dev_f:.3e}")));
        }
    }
    Ok(())
}
