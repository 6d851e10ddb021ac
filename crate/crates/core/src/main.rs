//! Command-line reports for Walsh-Fourier strong summability experiments.
//! Every subcommand writes a deterministic CSV table to stdout or a file.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use walshsum::counterexample::{Counterexample, Growth};
use walshsum::hardy::{check_p_atom, hardy_norm};
use walshsum::kernel::{dirichlet, dirichlet_block};
use walshsum::norms::{lp_norm, weak_lp_norm};
use walshsum::series::{partial_sum, partial_sum_from_coefficients};
use walshsum::fwht::coefficients2;
use walshsum::step::Step2;
use walshsum::walsh::cell_to_interval;

#[derive(Parser)]
#[command(name = "walshsum", version, about = "Two-dimensional Walsh-Fourier strong summability experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the CSV report here instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate the Walsh-Dirichlet kernel D_n on dyadic cells
    Kernel {
        /// Kernel order n
        #[arg(long)]
        order: u64,
        /// Resolution level (2^level cells)
        #[arg(long, default_value_t = 8)]
        level: u32,
        /// List cells in left-to-right interval order instead of index order
        #[arg(long)]
        interval_order: bool,
    },
    /// Per-block data of the extremal martingale: exponents, atomic
    /// coefficients, Walsh-Fourier coefficients and the H_p bound
    Blocks {
        #[command(flatten)]
        params: MartingaleParams,
    },
    /// Band-by-band lower bounds for the Phi-weighted strong means of the
    /// extremal martingale, against the divergence certificate Phi^(3/4)
    Divergence {
        #[command(flatten)]
        params: MartingaleParams,
        /// Also compute the exact weak-L_p norm of one odd partial sum per
        /// band (skipped for bands needing resolution above this level)
        #[arg(long, default_value_t = 16)]
        exact_level_cap: u32,
    },
    /// Strong means sum_{k<=n} ||S_{k,k} a||_p^p / k^(3-2p) for a single
    /// p-atom, the bounded side of the summability picture
    StrongMeans {
        /// Exponent p in (0, 1]
        #[arg(long)]
        p: f64,
        /// Resolution level of the atom and the partial sums
        #[arg(long, default_value_t = 6)]
        level: u32,
        /// Supporting cube rank j of the atom
        #[arg(long, default_value_t = 2)]
        support: u32,
    },
}

#[derive(clap::Args)]
struct MartingaleParams {
    /// Exponent p in (0, 1)
    #[arg(long)]
    p: f64,
    /// Aspect-ratio bound alpha > 0
    #[arg(long)]
    alpha: f64,
    /// Growth weight Phi: `log:<q>` or `pow:<beta>`
    #[arg(long, value_parser = parse_growth, default_value = "log:8")]
    growth: Growth,
    /// Number of lacunary blocks to build
    #[arg(long, default_value_t = 5)]
    blocks: usize,
    /// Largest admissible resolution level
    #[arg(long, default_value_t = 26)]
    level_cap: u32,
}

fn parse_growth(s: &str) -> Result<Growth, String> {
    s.parse()
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let mut sink: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("cannot create {}", path.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    match cli.command {
        Command::Kernel {
            order,
            level,
            interval_order,
        } => kernel_report(&mut sink, order, level, interval_order),
        Command::Blocks { params } => blocks_report(&mut sink, &build(&params)?),
        Command::Divergence {
            params,
            exact_level_cap,
        } => divergence_report(&mut sink, &build(&params)?, exact_level_cap),
        Command::StrongMeans { p, level, support } => {
            strong_means_report(&mut sink, p, level, support)
        }
    }
}

fn build(params: &MartingaleParams) -> Result<Counterexample> {
    Counterexample::new(
        params.p,
        params.alpha,
        params.growth,
        params.blocks,
        params.level_cap,
    )
    .map_err(Into::into)
}

fn kernel_report(out: &mut dyn Write, order: u64, level: u32, interval_order: bool) -> Result<()> {
    if order > 1u64 << level {
        bail!("order {order} exceeds 2^{level}");
    }
    let d = dirichlet(order, level);
    writeln!(out, "position,cell,value")?;
    for pos in 0..d.len() as u64 {
        let cell = if interval_order {
            cell_to_interval(pos, level)
        } else {
            pos
        };
        writeln!(out, "{pos},{cell},{}", d.value(cell))?;
    }
    Ok(())
}

fn blocks_report(out: &mut dyn Write, ce: &Counterexample) -> Result<()> {
    writeln!(
        out,
        "k,alpha_k,block_top,phi,lambda,coefficient,hardy_bound_partial"
    )?;
    let p = ce.p();
    let mut lambda_pow_sum = 0.0;
    for k in 0..ce.num_blocks() {
        lambda_pow_sum += ce.lambda(k).powf(p);
        writeln!(
            out,
            "{k},{},{},{:.6e},{:.6e},{:.6e},{:.6e}",
            ce.block_exponent(k),
            ce.block_top(k),
            ce.phi_block(k),
            ce.lambda(k),
            ce.block_coefficient(k),
            lambda_pow_sum.powf(1.0 / p),
        )?;
    }
    Ok(())
}

fn divergence_report(out: &mut dyn Write, ce: &Counterexample, exact_cap: u32) -> Result<()> {
    writeln!(
        out,
        "k,alpha_k,phi,tail_value,weak_lp_exact,band_sum_lower,cumulative,certificate,ratio"
    )?;
    let mut cumulative = 0.0;
    for k in 0..ce.num_blocks() {
        let band = ce.band_sum_lower_bound(k);
        cumulative += band;
        let certificate = ce.certificate(k);
        // exact weak norm of one representative odd partial sum, where the
        // resolution stays affordable
        let level = ce.block_top(k);
        let exact = if level <= exact_cap {
            let m = (1u64 << ce.block_exponent(k)) + 1;
            format!("{:.6e}", ce.weak_lp_partial_sum(m, m + 2, level))
        } else {
            String::from("skipped")
        };
        writeln!(
            out,
            "{k},{},{:.6e},{:.6e},{exact},{:.6e},{:.6e},{:.6e},{:.6e}",
            ce.block_exponent(k),
            ce.phi_block(k),
            ce.tail_value(k),
            band,
            cumulative,
            certificate,
            band / certificate,
        )?;
    }
    Ok(())
}

fn strong_means_report(out: &mut dyn Write, p: f64, level: u32, support: u32) -> Result<()> {
    if !(p > 0.0 && p <= 1.0) {
        bail!("p must lie in (0, 1], got {p}");
    }
    if support + 1 > level {
        bail!("support rank {support} needs level at least {}", support + 1);
    }
    // a concrete p-atom: normalized product of Dirichlet block kernels
    let b = dirichlet_block(support, support + 1, level).map(|v| v as f64);
    let g = Step2::separable(&b, &b);
    let scale = ((2 * support) as f64 / p).exp2() / g.sup_norm();
    let atom = g.map(|v| v * scale);
    check_p_atom(&atom, support, p, 1e-9).map_err(|e| anyhow::anyhow!("not a p-atom: {e}"))?;
    let hardy = hardy_norm(&atom, p);

    writeln!(out, "# hardy_norm,{hardy:.6e}")?;
    writeln!(out, "n,lp_norm,weak_lp_norm,term,partial_sum")?;
    let coeffs = coefficients2(&partial_sum(&atom, atom.side(), atom.side()));
    let mut running = 0.0;
    for n in 1..=atom.side() {
        let s = partial_sum_from_coefficients(&coeffs, n, n);
        let norm = lp_norm(&s, p);
        let weak = weak_lp_norm(&s, p);
        let term = norm.powf(p) / (n as f64).powf(3.0 - 2.0 * p);
        running += term;
        writeln!(
            out,
            "{n},{norm:.6e},{weak:.6e},{term:.6e},{running:.6e}"
        )?;
    }
    Ok(())
}
