//! Forward saturation over a bounded formula universe.
//!
//! The universe starts from the subformula closure of the goal, adds single
//! and double negations of that closure, then admits conjunctions and
//! disjunctions of universe pairs breadth-first until the budget is full.
//! Admission order is by (size, rendered text), so enlarging the budget
//! only extends the universe; a goal proved under one budget stays proved
//! under any larger one.
//!
//! Saturation computes the least relation over the universe closed under
//! the logic's rules restricted to it. Every derived pair is an instance of
//! a real rule applied to derived premises, so the outcome is sound for the
//! unrestricted logic; failing to derive the goal only exhausts the budget.

use super::rules::{RuleId, RuleInstance};
use crate::formula::{Consecution, Formula, LogicId};
use std::collections::{HashMap, VecDeque};

/// Bounds on the saturation universe and on derived consecutions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SaturationBudget {
    pub max_universe: usize,
    pub max_steps: usize,
}

impl Default for SaturationBudget {
    fn default() -> Self {
        SaturationBudget {
            max_universe: 256,
            max_steps: 200_000,
        }
    }
}

/// Hard cap keeping the dense derivation table small.
pub const MAX_UNIVERSE: usize = 1024;

/// Statistics reported when a goal is neither proved nor refuted.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct BudgetReport {
    pub universe_size: usize,
    pub steps: usize,
    pub max_universe: usize,
    pub max_steps: usize,
    pub universe_truncated: bool,
    pub steps_exhausted: bool,
    /// Largest frame size tried by the refuter, when one ran.
    pub max_states_searched: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub enum SaturateOutcome {
    Proved(Vec<RuleInstance>),
    Exhausted(BudgetReport),
}

const ABSENT: u16 = u16::MAX;

#[derive(Clone, Copy, Debug)]
enum Shape {
    Leaf,
    Neg,
    And(u16, u16),
    Or(u16, u16),
    Box(u16),
    Dia(u16),
}

struct Universe {
    formulas: Vec<Formula>,
    index: HashMap<Formula, u16>,
    shape: Vec<Shape>,
    neg_of: Vec<u16>,
    box_of: Vec<u16>,
    dia_of: Vec<u16>,
    and_of: Vec<u16>,
    or_of: Vec<u16>,
    bot: u16,
    top: u16,
    truncated: bool,
}

fn sort_key(f: &Formula) -> (usize, String) {
    (f.size(), f.render())
}

impl Universe {
    fn build(goal: &Consecution, extra: &[Consecution], budget: &SaturationBudget) -> Universe {
        let cap = budget.max_universe.clamp(1, MAX_UNIVERSE);
        let mut base = goal.lhs().subformulas();
        base.extend(goal.rhs().subformulas());
        for axiom in extra {
            base.extend(axiom.lhs().subformulas());
            base.extend(axiom.rhs().subformulas());
        }
        if goal.logic().is_modal() {
            // seed the constants the modal axioms mention
            for f in [
                Formula::Bot,
                Formula::Top,
                Formula::neg(Formula::Top),
                Formula::boxed(Formula::Top),
                Formula::dia(Formula::Bot),
            ] {
                base.extend(f.subformulas());
            }
        }
        let mut ordered: Vec<Formula> = base.into_iter().collect();
        ordered.sort_by_cached_key(sort_key);

        let mut u = Universe {
            formulas: Vec::new(),
            index: HashMap::new(),
            shape: Vec::new(),
            neg_of: Vec::new(),
            box_of: Vec::new(),
            dia_of: Vec::new(),
            and_of: Vec::new(),
            or_of: Vec::new(),
            bot: ABSENT,
            top: ABSENT,
            truncated: false,
        };
        let stage0_len;
        {
            for f in ordered.iter() {
                u.admit(f.clone(), cap);
            }
            stage0_len = u.formulas.len();
        }
        // negations and double negations of the base closure
        let stage0: Vec<Formula> = u.formulas[..stage0_len].to_vec();
        let mut cands: Vec<Formula> = Vec::new();
        for f in stage0 {
            cands.push(Formula::neg(f.clone()));
            cands.push(Formula::neg(Formula::neg(f)));
        }
        cands.sort_by_cached_key(sort_key);
        cands.dedup();
        for f in cands {
            u.admit(f, cap);
        }
        // conjunctions and disjunctions of pairs already admitted
        loop {
            if u.formulas.len() >= cap {
                u.truncated = true;
                break;
            }
            let snapshot = u.formulas.clone();
            let mut cands: Vec<Formula> = Vec::new();
            for a in &snapshot {
                for b in &snapshot {
                    let and = Formula::and(a.clone(), b.clone());
                    if !u.index.contains_key(&and) {
                        cands.push(and);
                    }
                    let or = Formula::or(a.clone(), b.clone());
                    if !u.index.contains_key(&or) {
                        cands.push(or);
                    }
                }
            }
            if cands.is_empty() {
                break;
            }
            cands.sort_by_cached_key(sort_key);
            cands.dedup();
            let before = u.formulas.len();
            for f in cands {
                u.admit(f, cap);
            }
            if u.formulas.len() == before {
                break;
            }
        }
        u.finish();
        u
    }

    fn admit(&mut self, f: Formula, cap: usize) {
        if self.index.contains_key(&f) {
            return;
        }
        if self.formulas.len() >= cap {
            self.truncated = true;
            return;
        }
        let id = self.formulas.len() as u16;
        self.index.insert(f.clone(), id);
        self.formulas.push(f);
    }

    fn finish(&mut self) {
        let m = self.formulas.len();
        self.shape = vec![Shape::Leaf; m];
        self.neg_of = vec![ABSENT; m];
        self.box_of = vec![ABSENT; m];
        self.dia_of = vec![ABSENT; m];
        self.and_of = vec![ABSENT; m * m];
        self.or_of = vec![ABSENT; m * m];
        for (i, f) in self.formulas.iter().enumerate() {
            let get = |g: &Formula| self.index.get(g).copied().unwrap_or(ABSENT);
            match f {
                Formula::Atom(_) => {}
                Formula::Bot => self.bot = i as u16,
                Formula::Top => self.top = i as u16,
                Formula::Neg(g) => {
                    let c = get(g);
                    self.shape[i] = Shape::Neg;
                    if c != ABSENT {
                        self.neg_of[c as usize] = i as u16;
                    }
                }
                Formula::And(a, b) => {
                    let (ca, cb) = (get(a), get(b));
                    self.shape[i] = Shape::And(ca, cb);
                    if ca != ABSENT && cb != ABSENT {
                        self.and_of[ca as usize * m + cb as usize] = i as u16;
                    }
                }
                Formula::Or(a, b) => {
                    let (ca, cb) = (get(a), get(b));
                    self.shape[i] = Shape::Or(ca, cb);
                    if ca != ABSENT && cb != ABSENT {
                        self.or_of[ca as usize * m + cb as usize] = i as u16;
                    }
                }
                Formula::Box(g) => {
                    let c = get(g);
                    self.shape[i] = Shape::Box(c);
                    if c != ABSENT {
                        self.box_of[c as usize] = i as u16;
                    }
                }
                Formula::Dia(g) => {
                    let c = get(g);
                    self.shape[i] = Shape::Dia(c);
                    if c != ABSENT {
                        self.dia_of[c as usize] = i as u16;
                    }
                }
            }
        }
    }

    fn len(&self) -> usize {
        self.formulas.len()
    }
}

struct RuleSet {
    six: bool,
    ten: bool,
    eleven: bool,
    dne: bool,
    pc: bool,
    pbcs: bool,
    modal: bool,
}

impl RuleSet {
    fn for_logic(logic: LogicId) -> RuleSet {
        match logic {
            LogicId::Fundamental => RuleSet {
                six: true,
                ten: true,
                eleven: true,
                dne: false,
                pc: false,
                pbcs: false,
                modal: false,
            },
            LogicId::Ortho => RuleSet {
                six: true,
                ten: true,
                eleven: true,
                dne: true,
                pc: false,
                pbcs: false,
                modal: false,
            },
            // the strengthened rules replace 6/11 and 10
            LogicId::IntuitionisticFragment => RuleSet {
                six: false,
                ten: false,
                eleven: false,
                dne: false,
                pc: true,
                pbcs: true,
                modal: false,
            },
            LogicId::Classical => RuleSet {
                six: true,
                ten: true,
                eleven: true,
                dne: true,
                pc: true,
                pbcs: true,
                modal: false,
            },
            LogicId::FundamentalModal => RuleSet {
                six: true,
                ten: true,
                eleven: true,
                dne: false,
                pc: false,
                pbcs: false,
                modal: true,
            },
        }
    }
}

#[derive(Clone, Copy)]
struct Deriv {
    rule: u8,
    p1: u32,
    p2: u32,
}

const NO_DERIV: Deriv = Deriv {
    rule: 0,
    p1: 0,
    p2: 0,
};

fn rule_code(rule: RuleId) -> u8 {
    match rule {
        RuleId::Standard(n) => n,
        RuleId::Dne => 30,
        RuleId::PseudoComplement => 31,
        RuleId::CasesWithSide => 32,
        RuleId::Hypothesis => 33,
    }
}

fn code_rule(code: u8) -> RuleId {
    match code {
        30 => RuleId::Dne,
        31 => RuleId::PseudoComplement,
        32 => RuleId::CasesWithSide,
        33 => RuleId::Hypothesis,
        n => RuleId::Standard(n),
    }
}

fn rule_arity(code: u8) -> usize {
    match code {
        8 | 9 | 10 | 32 => 2,
        11 | 19 | 20 | 31 => 1,
        _ => 0,
    }
}

struct Engine<'a> {
    u: &'a Universe,
    rules: RuleSet,
    m: usize,
    words: usize,
    rows: Vec<u64>,
    cols: Vec<u64>,
    deriv: Vec<Deriv>,
    queue: VecDeque<u32>,
    steps: usize,
    max_steps: usize,
    steps_exhausted: bool,
    goal: u32,
    goal_found: bool,
}

impl<'a> Engine<'a> {
    fn new(u: &'a Universe, logic: LogicId, max_steps: usize, goal: (u16, u16)) -> Engine<'a> {
        let m = u.len();
        let words = m.div_ceil(64);
        Engine {
            u,
            rules: RuleSet::for_logic(logic),
            m,
            words,
            rows: vec![0; m * words],
            cols: vec![0; m * words],
            deriv: vec![NO_DERIV; m * m],
            queue: VecDeque::new(),
            steps: 0,
            max_steps,
            steps_exhausted: false,
            goal: goal.0 as u32 * m as u32 + goal.1 as u32,
            goal_found: false,
        }
    }

    fn has(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn insert(&mut self, i: u16, j: u16, rule: RuleId, p1: u32, p2: u32) {
        let (i, j) = (i as usize, j as usize);
        if self.has(i, j) {
            return;
        }
        if self.steps >= self.max_steps {
            self.steps_exhausted = true;
            return;
        }
        self.steps += 1;
        self.rows[i * self.words + j / 64] |= 1 << (j % 64);
        self.cols[j * self.words + i / 64] |= 1 << (i % 64);
        let code = (i * self.m + j) as u32;
        self.deriv[i * self.m + j] = Deriv {
            rule: rule_code(rule),
            p1,
            p2,
        };
        if code == self.goal {
            self.goal_found = true;
        }
        self.queue.push_back(code);
    }

    fn iter_bits(&self, base: &[u64]) -> Vec<u16> {
        let mut out = Vec::new();
        for (w, &bits) in base.iter().enumerate() {
            let mut bits = bits;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out.push((w * 64 + b) as u16);
            }
        }
        out
    }

    fn row_members(&self, i: usize) -> Vec<u16> {
        self.iter_bits(&self.rows[i * self.words..(i + 1) * self.words])
    }

    fn col_members(&self, j: usize) -> Vec<u16> {
        self.iter_bits(&self.cols[j * self.words..(j + 1) * self.words])
    }

    fn code(&self, i: u16, j: u16) -> u32 {
        i as u32 * self.m as u32 + j as u32
    }

    fn seed(&mut self) {
        let m = self.m as u16;
        let u = self.u;
        for i in 0..m {
            self.insert(i, i, RuleId::Standard(1), 0, 0);
        }
        for i in 0..m {
            match u.shape[i as usize] {
                Shape::And(a, b) if a != ABSENT && b != ABSENT => {
                    self.insert(i, a, RuleId::Standard(2), 0, 0);
                    self.insert(i, b, RuleId::Standard(3), 0, 0);
                    // explosion when the conjunction is a contradiction
                    if u.neg_of[a as usize] == b {
                        for k in 0..m {
                            self.insert(i, k, RuleId::Standard(7), 0, 0);
                        }
                    }
                }
                Shape::Or(a, b) if a != ABSENT && b != ABSENT => {
                    self.insert(a, i, RuleId::Standard(4), 0, 0);
                    self.insert(b, i, RuleId::Standard(5), 0, 0);
                }
                _ => {}
            }
        }
        if self.rules.six {
            for i in 0..m {
                let n1 = u.neg_of[i as usize];
                if n1 == ABSENT {
                    continue;
                }
                let n2 = u.neg_of[n1 as usize];
                if n2 != ABSENT {
                    self.insert(i, n2, RuleId::Standard(6), 0, 0);
                }
            }
        }
        if self.rules.dne {
            for i in 0..m {
                let n1 = u.neg_of[i as usize];
                if n1 == ABSENT {
                    continue;
                }
                let n2 = u.neg_of[n1 as usize];
                if n2 != ABSENT {
                    self.insert(n2, i, RuleId::Dne, 0, 0);
                }
            }
        }
        if self.rules.modal {
            let (bot, top) = (u.bot, u.top);
            if bot != ABSENT {
                for k in 0..m {
                    self.insert(bot, k, RuleId::Standard(12), 0, 0);
                }
            }
            if top != ABSENT {
                for k in 0..m {
                    self.insert(k, top, RuleId::Standard(12), 0, 0);
                }
                if bot != ABSENT && u.neg_of[top as usize] != ABSENT {
                    self.insert(u.neg_of[top as usize], bot, RuleId::Standard(13), 0, 0);
                }
                if u.box_of[top as usize] != ABSENT {
                    self.insert(top, u.box_of[top as usize], RuleId::Standard(17), 0, 0);
                }
            }
            if bot != ABSENT && u.dia_of[bot as usize] != ABSENT {
                self.insert(u.dia_of[bot as usize], bot, RuleId::Standard(18), 0, 0);
            }
            for i in 0..m {
                // box distribution over a conjunction
                if let Shape::And(a, b) = u.shape[i as usize] {
                    if a == ABSENT || b == ABSENT {
                        continue;
                    }
                    if let (Shape::Box(x), Shape::Box(y)) =
                        (u.shape[a as usize], u.shape[b as usize])
                    {
                        if x != ABSENT && y != ABSENT {
                            let xy = u.and_of[x as usize * self.m + y as usize];
                            if xy != ABSENT && u.box_of[xy as usize] != ABSENT {
                                self.insert(
                                    i,
                                    u.box_of[xy as usize],
                                    RuleId::Standard(14),
                                    0,
                                    0,
                                );
                            }
                        }
                    }
                }
            }
            for i in 0..m {
                // dia distribution over a disjunction
                if let Shape::Dia(c) = u.shape[i as usize] {
                    if c == ABSENT {
                        continue;
                    }
                    if let Shape::Or(x, y) = u.shape[c as usize] {
                        if x == ABSENT || y == ABSENT {
                            continue;
                        }
                        let (dx, dy) = (u.dia_of[x as usize], u.dia_of[y as usize]);
                        if dx != ABSENT && dy != ABSENT {
                            let o = u.or_of[dx as usize * self.m + dy as usize];
                            if o != ABSENT {
                                self.insert(i, o, RuleId::Standard(15), 0, 0);
                            }
                        }
                    }
                }
            }
            for x in 0..m {
                // dia-neg below neg-box
                let nx = u.neg_of[x as usize];
                if nx == ABSENT {
                    continue;
                }
                let dnx = u.dia_of[nx as usize];
                let bx = u.box_of[x as usize];
                if dnx == ABSENT || bx == ABSENT {
                    continue;
                }
                let nbx = u.neg_of[bx as usize];
                if nbx != ABSENT {
                    self.insert(dnx, nbx, RuleId::Standard(16), 0, 0);
                }
            }
        }
    }

    fn run(&mut self) {
        while let Some(codeval) = self.queue.pop_front() {
            if self.goal_found {
                return;
            }
            let i = (codeval / self.m as u32) as u16;
            let j = (codeval % self.m as u32) as u16;
            self.process(i, j);
        }
    }

    fn process(&mut self, i: u16, j: u16) {
        let u = self.u;
        let m = self.m;
        // cut, both roles
        for k in self.row_members(j as usize) {
            self.insert(i, k, RuleId::Standard(8), self.code(i, j), self.code(j, k));
        }
        for h in self.col_members(i as usize) {
            self.insert(h, j, RuleId::Standard(8), self.code(h, i), self.code(i, j));
        }
        // adjunction on the right
        for k in self.row_members(i as usize) {
            let c = u.and_of[j as usize * m + k as usize];
            if c != ABSENT {
                self.insert(i, c, RuleId::Standard(9), self.code(i, j), self.code(i, k));
            }
            let c = u.and_of[k as usize * m + j as usize];
            if c != ABSENT {
                self.insert(i, c, RuleId::Standard(9), self.code(i, k), self.code(i, j));
            }
        }
        // proof by cases on the left
        if self.rules.ten {
            for k in self.col_members(j as usize) {
                let c = u.or_of[i as usize * m + k as usize];
                if c != ABSENT {
                    self.insert(c, j, RuleId::Standard(10), self.code(i, j), self.code(k, j));
                }
                let c = u.or_of[k as usize * m + i as usize];
                if c != ABSENT {
                    self.insert(c, j, RuleId::Standard(10), self.code(k, j), self.code(i, j));
                }
            }
        }
        // contraposition
        if self.rules.eleven {
            let (ni, nj) = (u.neg_of[i as usize], u.neg_of[j as usize]);
            if ni != ABSENT && nj != ABSENT {
                self.insert(nj, ni, RuleId::Standard(11), self.code(i, j), 0);
            }
        }
        if self.rules.modal {
            let (bi, bj) = (u.box_of[i as usize], u.box_of[j as usize]);
            if bi != ABSENT && bj != ABSENT {
                self.insert(bi, bj, RuleId::Standard(19), self.code(i, j), 0);
            }
            let (di, dj) = (u.dia_of[i as usize], u.dia_of[j as usize]);
            if di != ABSENT && dj != ABSENT {
                self.insert(di, dj, RuleId::Standard(20), self.code(i, j), 0);
            }
        }
        // pseudocomplementation: from x & y |- x & ~x conclude x |- ~y
        if self.rules.pc {
            if let (Shape::And(a, b), Shape::And(a2, c)) =
                (u.shape[i as usize], u.shape[j as usize])
            {
                if a != ABSENT && b != ABSENT && a == a2 && c != ABSENT && u.neg_of[a as usize] == c
                {
                    let nb = u.neg_of[b as usize];
                    if nb != ABSENT {
                        self.insert(a, nb, RuleId::PseudoComplement, self.code(i, j), 0);
                    }
                }
            }
        }
        // proof by cases with side assumptions
        if self.rules.pbcs {
            if let Shape::And(al, f) = u.shape[i as usize] {
                if al != ABSENT && f != ABSENT {
                    for k in self.col_members(j as usize) {
                        if let Shape::And(al2, g) = u.shape[k as usize] {
                            if al2 == al && g != ABSENT {
                                let fg = u.or_of[f as usize * m + g as usize];
                                if fg != ABSENT {
                                    let concl = u.and_of[al as usize * m + fg as usize];
                                    if concl != ABSENT {
                                        self.insert(
                                            concl,
                                            j,
                                            RuleId::CasesWithSide,
                                            self.code(i, j),
                                            self.code(k, j),
                                        );
                                    }
                                }
                                let gf = u.or_of[g as usize * m + f as usize];
                                if gf != ABSENT {
                                    let concl = u.and_of[al as usize * m + gf as usize];
                                    if concl != ABSENT {
                                        self.insert(
                                            concl,
                                            j,
                                            RuleId::CasesWithSide,
                                            self.code(k, j),
                                            self.code(i, j),
                                        );
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// Rebuild the derivation of the goal as an ordered trace.
    fn extract_trace(&self, logic: LogicId) -> Vec<RuleInstance> {
        let mut order: Vec<u32> = Vec::new();
        let mut seen: Vec<bool> = vec![false; self.m * self.m];
        // iterative post-order over the derivation dag
        let mut stack: Vec<(u32, bool)> = vec![(self.goal, false)];
        while let Some((code, expanded)) = stack.pop() {
            if seen[code as usize] {
                continue;
            }
            if expanded {
                seen[code as usize] = true;
                order.push(code);
                continue;
            }
            stack.push((code, true));
            let d = self.deriv[code as usize];
            let arity = rule_arity(d.rule);
            if arity >= 1 {
                stack.push((d.p1, false));
            }
            if arity == 2 {
                stack.push((d.p2, false));
            }
        }
        let cons = |code: u32| {
            let i = (code / self.m as u32) as usize;
            let j = (code % self.m as u32) as usize;
            Consecution::new(
                self.u.formulas[i].clone(),
                self.u.formulas[j].clone(),
                logic,
            )
            .expect("universe formulas are in the logic's language")
        };
        order
            .iter()
            .map(|&code| {
                let d = self.deriv[code as usize];
                let arity = rule_arity(d.rule);
                let mut premises = Vec::with_capacity(arity);
                if arity >= 1 {
                    premises.push(cons(d.p1));
                }
                if arity == 2 {
                    premises.push(cons(d.p2));
                }
                RuleInstance {
                    rule: code_rule(d.rule),
                    conclusion: cons(code),
                    premises,
                }
            })
            .collect()
    }
}

/// Forward-chain all rule instances of the goal's logic over the bounded
/// universe; returns a replayable trace on success.
pub fn saturate(goal: &Consecution, budget: &SaturationBudget) -> SaturateOutcome {
    saturate_with_axioms(goal, &[], budget)
}

/// Saturation with extra consecutions assumed outright. Assumption steps
/// appear in the trace under the `hyp` tag, so the result witnesses
/// derivability from the axioms rather than in the bare logic.
pub fn saturate_with_axioms(
    goal: &Consecution,
    axioms: &[Consecution],
    budget: &SaturationBudget,
) -> SaturateOutcome {
    let u = Universe::build(goal, axioms, budget);
    let report = |u: &Universe, steps, steps_exhausted, goal_in| BudgetReport {
        universe_size: u.len(),
        steps,
        max_universe: budget.max_universe,
        max_steps: budget.max_steps,
        universe_truncated: u.truncated,
        steps_exhausted,
        max_states_searched: 0,
        note: if goal_in {
            None
        } else {
            Some("goal formulas did not fit in the universe".to_string())
        },
    };
    let (gl, gr) = (u.index.get(goal.lhs()), u.index.get(goal.rhs()));
    let (gl, gr) = match (gl, gr) {
        (Some(&a), Some(&b)) => (a, b),
        _ => return SaturateOutcome::Exhausted(report(&u, 0, false, false)),
    };
    let mut engine = Engine::new(&u, goal.logic(), budget.max_steps, (gl, gr));
    for axiom in axioms {
        if let (Some(&a), Some(&b)) = (u.index.get(axiom.lhs()), u.index.get(axiom.rhs())) {
            engine.insert(a, b, RuleId::Hypothesis, 0, 0);
        }
    }
    engine.seed();
    engine.run();
    if engine.goal_found {
        SaturateOutcome::Proved(engine.extract_trace(goal.logic()))
    } else {
        SaturateOutcome::Exhausted(report(&u, engine.steps, engine.steps_exhausted, true))
    }
}
