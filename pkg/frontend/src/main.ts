// DOM wiring for the live meter page.
//
// The candidate password lives only in the input element and in the request
// body sent to the configured service; it is never written to storage.

import { assessPassword, fetchHealth } from "./api";
import { MeterController } from "./controller";
import { labelText, maskSecret, similarityPercent, violationText } from "./format";
import type { UiState } from "./types";

const params = new URLSearchParams(window.location.search);
const SERVICE_BASE = params.get("service") ?? "";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const input = el<HTMLInputElement>("password");
const slider = el<HTMLInputElement>("threshold");
const sliderValue = el<HTMLSpanElement>("threshold-value");
const bar = el<HTMLDivElement>("bar-fill");
const barCaption = el<HTMLSpanElement>("bar-caption");
const verdictLabel = el<HTMLDivElement>("verdict-label");
const nearest = el<HTMLSpanElement>("nearest-weak");
const nearestSource = el<HTMLSpanElement>("nearest-source");
const revealButton = el<HTMLButtonElement>("reveal");
const checklist = el<HTMLUListElement>("violations");
const banner = el<HTMLDivElement>("banner");
const health = el<HTMLDivElement>("health");

function render(state: UiState): void {
  banner.hidden = state.error === null;
  if (state.error !== null) {
    banner.textContent = `Service unreachable, showing the last result (${state.error})`;
  }

  if (state.verdict === null) {
    verdictLabel.textContent = state.pending ? "Checking..." : "Type a password to check it";
    verdictLabel.dataset.label = "";
    bar.style.width = "0%";
    barCaption.textContent = "";
    nearest.textContent = "";
    nearestSource.textContent = "";
    revealButton.hidden = true;
    checklist.replaceChildren();
    return;
  }

  const verdict = state.verdict;
  const pct = similarityPercent(verdict.max_similarity);
  verdictLabel.textContent = labelText(verdict.label) + (state.pending ? " ..." : "");
  verdictLabel.dataset.label = verdict.label;
  bar.style.width = `${pct}%`;
  bar.dataset.label = verdict.label;
  barCaption.textContent = `${pct}% similar to the nearest weak password`;

  if (verdict.nearest_weak) {
    nearest.textContent = state.revealNearest
      ? verdict.nearest_weak
      : maskSecret(verdict.nearest_weak);
    nearestSource.textContent = verdict.nearest_source
      ? `(from ${verdict.nearest_source})`
      : "";
    revealButton.hidden = false;
    revealButton.textContent = state.revealNearest ? "hide" : "reveal";
  } else {
    nearest.textContent = "";
    nearestSource.textContent = "";
    revealButton.hidden = true;
  }

  checklist.replaceChildren(
    ...verdict.violations.map((code) => {
      const item = document.createElement("li");
      item.textContent = violationText(code);
      return item;
    })
  );
}

const controller = new MeterController({
  assess: (password, threshold) =>
    assessPassword(SERVICE_BASE, password, threshold),
  onRender: render,
});

input.addEventListener("input", () => controller.onInputChange(input.value));
slider.addEventListener("input", () => {
  const value = Number(slider.value);
  sliderValue.textContent = value.toFixed(2);
  controller.onThresholdChange(value);
});
revealButton.addEventListener("click", () => controller.toggleReveal());

slider.value = "0.5";
sliderValue.textContent = "0.50";
render(controller.getState());

fetchHealth(SERVICE_BASE).then(
  (status) => {
    const total = status.weak_list_sizes.reduce((a, b) => a + b, 0);
    health.textContent = `service ok, ${total} weak entries loaded`;
  },
  () => {
    health.textContent = "service unreachable";
  }
);
