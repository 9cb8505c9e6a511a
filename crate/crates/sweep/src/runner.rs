//! The run loop: fixed-order enumeration, optional worker pool with
//! in-order single-writer emission, periodic atomic checkpoints.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::mpsc;
use std::time::Instant;

use crate::checkpoint::{self, Checkpoint};
use crate::config::SweepConfig;
use crate::record::{Summary, SweepRecord};
use crate::report::{self, ReportWriter};
use crate::tasks;
use crate::SweepError;

/// Flush the writer and persist a checkpoint every this many grid indices.
const CHECKPOINT_EVERY: u64 = 256;

#[derive(Debug)]
pub struct RunOutcome {
    pub summary: Summary,
    /// True when `--halt-after` stopped the run early; the checkpoint is
    /// resumable and no summary was written to the report.
    pub halted: bool,
}

enum WorkItem {
    Skip(&'static str),
    Record(SweepRecord),
}

pub fn run(config: &SweepConfig) -> Result<RunOutcome, SweepError> {
    config.validate()?;
    let started = Instant::now();
    let grid = tasks::grid_size(config.task, config.max);
    let hash = config.content_hash();

    let mut summary = Summary::new(config.task.name(), config.max, grid);
    let mut start_index = 0u64;
    let mut records_done = 0u64;

    if config.resume {
        let ck = checkpoint::load(config.checkpoint.as_ref().unwrap())?;
        if ck.config_hash != hash {
            return Err(SweepError::CheckpointMismatch);
        }
        if ck.complete {
            return Err(SweepError::AlreadyComplete);
        }
        report::truncate_to_records(
            config.out.as_ref().unwrap(),
            config.format,
            ck.records,
        )?;
        start_index = ck.next_index;
        records_done = ck.records;
        summary.enumerated = ck.records;
        summary.skipped = ck.skipped;
        summary.status_totals = ck.status_totals;
        summary.counterexamples = ck.counterexamples;
    }

    let mut writer = match (&config.out, config.resume) {
        (Some(path), true) => ReportWriter::append(path, config.format)?,
        (Some(path), false) => ReportWriter::create(path, config.format)?,
        (None, _) => ReportWriter::stdout(config.format)?,
    };

    let mut state = WriterState {
        config,
        hash: &hash,
        writer: &mut writer,
        summary: &mut summary,
        records_done,
        next_index: start_index,
    };

    let halted = if config.workers <= 1 {
        run_serial(config, grid, start_index, &mut state)?
    } else {
        run_parallel(config, grid, start_index, &mut state)?
    };

    let records_done = state.records_done;
    let next_index = state.next_index;
    summary.wall_millis = started.elapsed().as_millis() as u64;

    if halted {
        writer.flush()?;
        save_checkpoint(config, &hash, &summary, next_index, records_done, false)?;
    } else {
        writer.write_summary(&summary)?;
        writer.flush()?;
        save_checkpoint(config, &hash, &summary, grid, records_done, true)?;
    }
    Ok(RunOutcome { summary, halted })
}

struct WriterState<'a> {
    config: &'a SweepConfig,
    hash: &'a str,
    writer: &'a mut ReportWriter,
    summary: &'a mut Summary,
    records_done: u64,
    next_index: u64,
}

impl WriterState<'_> {
    /// Account for one completed grid index. Returns true when the run
    /// should halt.
    fn consume(&mut self, item: WorkItem) -> Result<bool, SweepError> {
        match item {
            WorkItem::Skip(reason) => self.summary.count_skip(reason),
            WorkItem::Record(record) => {
                self.writer.write_record(&record)?;
                self.summary.count_record(&record);
                self.records_done += 1;
            }
        }
        self.next_index += 1;
        if self.next_index.is_multiple_of(CHECKPOINT_EVERY) {
            self.persist()?;
        }
        Ok(self
            .config
            .halt_after
            .is_some_and(|n| self.records_done >= n))
    }

    fn persist(&mut self) -> Result<(), SweepError> {
        self.writer.flush()?;
        save_checkpoint(
            self.config,
            self.hash,
            self.summary,
            self.next_index,
            self.records_done,
            false,
        )
    }
}

fn save_checkpoint(
    config: &SweepConfig,
    hash: &str,
    summary: &Summary,
    next_index: u64,
    records: u64,
    complete: bool,
) -> Result<(), SweepError> {
    let Some(path) = &config.checkpoint else {
        return Ok(());
    };
    checkpoint::save(
        path,
        &Checkpoint {
            config_hash: hash.to_string(),
            next_index,
            records,
            skipped: summary.skipped.clone(),
            status_totals: summary.status_totals.clone(),
            counterexamples: summary.counterexamples.clone(),
            complete,
        },
    )
}

fn work(config: &SweepConfig, index: u64) -> WorkItem {
    let params = tasks::params_at(config.task, config.max, index);
    match tasks::filter(&params) {
        Some(reason) => WorkItem::Skip(reason),
        None => WorkItem::Record(tasks::process_for_task(
            config.task,
            params,
            config.prime_budget,
            tasks::derive_seed(config.seed, index),
        )),
    }
}

fn run_serial(
    config: &SweepConfig,
    grid: u64,
    start_index: u64,
    state: &mut WriterState,
) -> Result<bool, SweepError> {
    for index in start_index..grid {
        let item = work(config, index);
        if state.consume(item)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn run_parallel(
    config: &SweepConfig,
    grid: u64,
    start_index: u64,
    state: &mut WriterState,
) -> Result<bool, SweepError> {
    let cursor = AtomicU64::new(start_index);
    let stop = AtomicBool::new(false);
    let (tx, rx) = mpsc::channel::<(u64, WorkItem)>();

    std::thread::scope(|scope| {
        for _ in 0..config.workers {
            let tx = tx.clone();
            let cursor = &cursor;
            let stop = &stop;
            scope.spawn(move || loop {
                if stop.load(Ordering::Relaxed) {
                    break;
                }
                let index = cursor.fetch_add(1, Ordering::Relaxed);
                if index >= grid {
                    break;
                }
                if tx.send((index, work(config, index))).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        // single writer: buffer out-of-order results, emit in index order
        let mut pending: BTreeMap<u64, WorkItem> = BTreeMap::new();
        let mut halted = false;
        while let Ok((index, item)) = rx.recv() {
            pending.insert(index, item);
            while let Some(item) = pending.remove(&state.next_index) {
                if state.consume(item)? {
                    stop.store(true, Ordering::Relaxed);
                    halted = true;
                    break;
                }
            }
            if halted {
                break;
            }
        }
        // On halt the receiver is dropped early; workers notice their send
        // failing (or the stop flag) and exit. Buffered indices beyond the
        // frontier are recomputed on resume.
        Ok(halted)
    })
}
