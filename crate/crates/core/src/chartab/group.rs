//! Finite groups enumerated from generators, with multiplication table,
//! inversion, and conjugacy classes. Sized for the desk-scale groups used
//! here (order at most a few dozen).

/// A finite group whose elements were produced by closing a generating set.
#[derive(Debug, Clone)]
pub struct EnumeratedGroup<E> {
    pub elements: Vec<E>,
    /// `words[i]` spells element `i` as a product of generators
    /// (empty for the identity at index 0).
    pub words: Vec<Vec<usize>>,
    /// `mult[i][j]` = index of `elements[i] * elements[j]`.
    pub mult: Vec<Vec<u32>>,
    pub inverse: Vec<u32>,
    pub class_of: Vec<u32>,
    /// Element indices per conjugacy class; class 0 contains the identity.
    pub classes: Vec<Vec<u32>>,
}

impl<E: Clone + PartialEq> EnumeratedGroup<E> {
    /// Breadth-first closure of the generators under `mul`.
    pub fn close(identity: E, generators: &[E], mul: impl Fn(&E, &E) -> E) -> Self {
        let mut elements = vec![identity];
        let mut words: Vec<Vec<usize>> = vec![vec![]];
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            for (g, gen) in generators.iter().enumerate() {
                let prod = mul(&elements[i], gen);
                if !elements.contains(&prod) {
                    let mut w = words[i].clone();
                    w.push(g);
                    elements.push(prod);
                    words.push(w);
                    frontier.push(elements.len() - 1);
                }
            }
        }
        let n = elements.len();
        let index_of = |e: &E| -> u32 {
            elements
                .iter()
                .position(|x| x == e)
                .expect("product stays in the closed set") as u32
        };
        let mult: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| index_of(&mul(&elements[i], &elements[j])))
                    .collect()
            })
            .collect();
        let inverse: Vec<u32> = (0..n)
            .map(|i| {
                (0..n as u32)
                    .find(|&j| mult[i][j as usize] == 0)
                    .expect("every element has an inverse")
            })
            .collect();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for i in 0..n {
            if class_of[i] != u32::MAX {
                continue;
            }
            let cid = classes.len() as u32;
            let mut members = Vec::new();
            for x in 0..n {
                let conj = mult[x][mult[i][inverse[x] as usize] as usize] as usize;
                if class_of[conj] == u32::MAX {
                    class_of[conj] = cid;
                    members.push(conj as u32);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        EnumeratedGroup {
            elements,
            words,
            mult,
            inverse,
            class_of,
            classes,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Smallest positive power of element `i` equal to the identity.
    pub fn element_order(&self, i: usize) -> u32 {
        let mut k = 1;
        let mut cur = i as u32;
        while cur != 0 {
            cur = self.mult[cur as usize][i];
            k += 1;
        }
        k
    }

    pub fn power(&self, i: usize, mut e: u32) -> u32 {
        let mut acc = 0u32;
        e %= self.element_order(i);
        for _ in 0..e {
            acc = self.mult[acc as usize][i];
        }
        acc
    }

    /// Class-multiplication structure constants: `constants[a][b][c]` counts
    /// pairs `(x, y)` in classes `a x b` with `x*y` equal to a fixed element
    /// of class `c`; equivalently the coefficient of the class sum of `c` in
    /// the product of the class sums of `a` and `b`.
    pub fn class_structure_constants(&self) -> Vec<Vec<Vec<u64>>> {
        let k = self.classes.len();
        let mut out = vec![vec![vec![0u64; k]; k]; k];
        for a in 0..k {
            for b in 0..k {
                let mut counts = vec![0u64; k];
                for &x in &self.classes[a] {
                    for &y in &self.classes[b] {
                        let z = self.mult[x as usize][y as usize] as usize;
                        counts[self.class_of[z] as usize] += 1;
                    }
                }
                // Each class-c element is hit equally often.
                for c in 0..k {
                    let size = self.classes[c].len() as u64;
                    debug_assert_eq!(counts[c] % size, 0);
                    out[a][b][c] = counts[c] / size;
                }
            }
        }
        out
    }
}
