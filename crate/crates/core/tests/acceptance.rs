//! Runs every end-to-end check at full size and prints one line per check.
//! Exits nonzero if any check fails or overruns its time limit.

use std::process::ExitCode;

use freelnd::deriv::weitzenbock;
use freelnd::ncalg::{rat, NCPoly};
use freelnd::oracle::{ak_basis, compare_kernels, graded_kernel_basis, recover_scalar, KernelComparison};
use freelnd::verify::{run_all, Budget};

fn spot_checks() -> Vec<(&'static str, bool)> {
    let d1 = weitzenbock(1);
    let dim = |n| graded_kernel_basis(&d1, 1, n).map(|k| k.dimension()).ok();
    let t1 = NCPoly::t1();
    let powers: Vec<NCPoly> = (0..=3).rev().map(|k| t1.pow(k)).collect();
    let witness = matches!(
        compare_kernels(&d1, &weitzenbock(2), 1, 6),
        Ok(KernelComparison::Witness { .. })
    );
    let scalars = [rat(3, 1), rat(-1, 2), rat(7, 5)]
        .iter()
        .all(|a| recover_scalar(&d1, &d1.scale(a), 6).ok().as_ref() == Some(a));
    vec![
        ("m=1 weight 2 kernel has dimension 2", dim(2) == Some(2)),
        ("m=1 weight 4 kernel has dimension 6", dim(4) == Some(6)),
        ("common kernel to degree 6 is T1^3, T1^2, T1, 1", ak_basis(6, 6).ok() == Some(powers.clone())),
        ("common kernel stable at M = 8", ak_basis(8, 6).ok() == Some(powers)),
        ("δ1 and δ2 kernels separated by a witness", witness),
        ("scalars 3, -1/2, 7/5 recovered", scalars),
    ]
}

fn main() -> ExitCode {
    let mut ok = true;
    for outcome in run_all(&Budget::full()) {
        println!("{}", outcome.line());
        ok &= outcome.passed && outcome.within_time();
    }
    for (name, passed) in spot_checks() {
        println!("[{}] spot: {name}", if passed { "PASS" } else { "FAIL" });
        ok &= passed;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
