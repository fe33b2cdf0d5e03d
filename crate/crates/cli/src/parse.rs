use anyhow::bail;
use negcat_core::derived::DInd;
use negcat_core::orbit::{CategoryContext, Diagonal};
use negcat_core::typea::Interval;

use crate::UsageError;

fn pair(token: &str) -> anyhow::Result<(usize, usize)> {
    let t = token.trim_matches(|c| c == '(' || c == ')' || c == '[' || c == ']');
    let parts: Vec<&str> = t.split(',').collect();
    if parts.len() != 2 {
        bail!(UsageError(format!("expected a pair `a,b`, got `{token}`")));
    }
    let p = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| UsageError(format!("not a number in `{token}`")))
    };
    Ok((p(parts[0])?, p(parts[1])?))
}

/// `a,b`, admissible in the given context.
pub fn diagonal(ctx: &CategoryContext, token: &str) -> anyhow::Result<Diagonal> {
    let (a, b) = pair(token)?;
    if !ctx.is_admissible(a, b) {
        bail!(UsageError(format!(
            "({a},{b}) is not an admissible diagonal of the {}-gon",
            ctx.big_n
        )));
    }
    Ok(Diagonal::new(a, b))
}

/// `lo,hi` for the interval module, optionally followed by `@k` for `Σ^k`.
pub fn derived_object(n: usize, token: &str) -> anyhow::Result<DInd> {
    let (body, shift) = match token.split_once('@') {
        Some((b, s)) => (
            b,
            s.parse::<i32>()
                .map_err(|_| UsageError(format!("bad shift in `{token}`")))?,
        ),
        None => (token, 0),
    };
    let (lo, hi) = pair(body)?;
    if lo == 0 || lo > hi || hi > n {
        bail!(UsageError(format!(
            "[{lo},{hi}] is not an interval of 1..={n}"
        )));
    }
    Ok(DInd::new(shift, Interval::new(lo, hi)))
}
