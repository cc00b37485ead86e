//! A small backtracking driver shared by the enumerators.

use crate::error::{Budget, Result};

/// Depth-first search over `n` variables.
///
/// `domain(v, prefix)` lists candidates for variable `v` given the values of
/// variables `0..v`; `check(v, assignment)` is called with `assignment` of
/// length `v + 1` and must test every constraint whose last variable is `v`.
/// Every complete assignment is passed to `emit`, which returns `false` to
/// stop the search.
pub(crate) fn backtrack(
    n: usize,
    budget: &mut Budget,
    domain: &mut dyn FnMut(usize, &[usize]) -> Vec<usize>,
    check: &mut dyn FnMut(usize, &[usize]) -> bool,
    emit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<()> {
    if n == 0 {
        emit(&[])?;
        return Ok(());
    }
    let mut assign: Vec<usize> = Vec::with_capacity(n);
    let mut stack: Vec<(Vec<usize>, usize)> = vec![(domain(0, &[]), 0)];
    while !stack.is_empty() {
        let depth = stack.len() - 1;
        let (cands, pos) = stack.last_mut().unwrap();
        if *pos >= cands.len() {
            stack.pop();
            assign.pop();
            continue;
        }
        let value = cands[*pos];
        *pos += 1;
        budget.tick()?;
        assign.truncate(depth);
        assign.push(value);
        if !check(depth, &assign) {
            continue;
        }
        if depth + 1 == n {
            if !emit(&assign)? {
                return Ok(());
            }
        } else {
            let next = domain(depth + 1, &assign);
            stack.push((next, 0));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_increasing_triples() {
        let mut found = Vec::new();
        backtrack(
            3,
            &mut Budget::default(),
            &mut |_, _| (0..4).collect(),
            &mut |v, a| v == 0 || a[v - 1] < a[v],
            &mut |a| {
                found.push(a.to_vec());
                Ok(true)
            },
        )
        .unwrap();
        assert_eq!(found.len(), 4);
        assert_eq!(found[0], vec![0, 1, 2]);
    }

    #[test]
    fn budget_aborts() {
        let r = backtrack(3, &mut Budget::new(5), &mut |_, _| (0..4).collect(), &mut |_, _| true, &mut |_| Ok(true));
        assert!(r.is_err());
    }
}
