// Input-to-verdict state machine, independent of the DOM so it can be
// driven by tests with fake timers and a scripted service.

import type { AssessResponse, UiState } from "./types";

export const MIN_DEBOUNCE_MS = 200;

export type AssessFn = (
  password: string,
  threshold: number
) => Promise<AssessResponse>;

export interface MeterOptions {
  assess: AssessFn;
  onRender: (state: UiState) => void;
  debounceMs?: number;
}

export class MeterController {
  private readonly assess: AssessFn;
  private readonly onRender: (state: UiState) => void;
  private readonly debounceMs: number;

  private state: UiState = {
    input: "",
    threshold: 0.5,
    verdict: null,
    pending: false,
    error: null,
    revealNearest: false,
  };

  private timer: ReturnType<typeof setTimeout> | null = null;
  private nextSeq = 0;
  // seq of the newest response applied to state; late arrivals with a lower
  // seq are dropped even when their input happens to match again
  private appliedSeq = -1;

  constructor(options: MeterOptions) {
    this.assess = options.assess;
    this.onRender = options.onRender;
    this.debounceMs = Math.max(MIN_DEBOUNCE_MS, options.debounceMs ?? MIN_DEBOUNCE_MS);
  }

  getState(): UiState {
    return { ...this.state };
  }

  onInputChange(text: string): void {
    this.state.input = text;
    this.state.revealNearest = false;
    if (text === "") {
      // neutral state: nothing to assess, in-flight answers are obsolete
      this.cancelScheduled();
      this.nextSeq += 1;
      this.appliedSeq = this.nextSeq - 1;
      this.state.verdict = null;
      this.state.pending = false;
      this.state.error = null;
      this.render();
      return;
    }
    this.schedule();
  }

  onThresholdChange(value: number): void {
    this.state.threshold = Math.min(1, Math.max(0, value));
    if (this.state.input !== "") {
      this.schedule();
    } else {
      this.render();
    }
  }

  toggleReveal(): void {
    this.state.revealNearest = !this.state.revealNearest;
    this.render();
  }

  /** Flush a scheduled request immediately (submit button, tests). */
  flush(): void {
    if (this.timer !== null) {
      this.cancelScheduled();
      this.fire();
    }
  }

  private schedule(): void {
    this.cancelScheduled();
    this.state.pending = true;
    this.render();
    this.timer = setTimeout(() => {
      this.timer = null;
      this.fire();
    }, this.debounceMs);
  }

  private cancelScheduled(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
  }

  private fire(): void {
    const seq = this.nextSeq++;
    const input = this.state.input;
    const threshold = this.state.threshold;
    this.assess(input, threshold).then(
      (verdict) => this.applyVerdict(seq, input, verdict),
      (err: unknown) => this.applyFailure(seq, input, err)
    );
  }

  private isCurrent(seq: number, input: string): boolean {
    return input === this.state.input && seq > this.appliedSeq;
  }

  private applyVerdict(seq: number, input: string, verdict: AssessResponse): void {
    if (!this.isCurrent(seq, input)) {
      return; // superseded while in flight
    }
    this.appliedSeq = seq;
    this.state.verdict = verdict;
    this.state.error = null;
    this.state.pending = this.timer !== null;
    this.render();
  }

  private applyFailure(seq: number, input: string, err: unknown): void {
    if (!this.isCurrent(seq, input)) {
      return;
    }
    this.appliedSeq = seq;
    // keep the last verdict on screen; the banner explains the staleness
    this.state.error = err instanceof Error ? err.message : String(err);
    this.state.pending = this.timer !== null;
    this.render();
  }

  private render(): void {
    this.onRender(this.getState());
  }
}
