// Small display helpers kept separate so they are trivially testable.

/** Similarity as a whole percentage for the bar width and caption. */
export function similarityPercent(value: number): number {
  const clamped = Math.min(1, Math.max(0, value));
  return Math.round(clamped * 100);
}

/**
 * Mask a weak-list entry for display: first and last character stay visible,
 * everything between becomes bullets. Entries of one or two characters are
 * fully masked since showing both ends would reveal the whole string.
 */
export function maskSecret(secret: string): string {
  const chars = Array.from(secret);
  if (chars.length <= 2) {
    return "•".repeat(chars.length);
  }
  return chars[0] + "•".repeat(chars.length - 2) + chars[chars.length - 1];
}

const LABEL_TEXT: Record<string, string> = {
  weak_similar: "Too similar to a known weak password",
  weak_policy: "Does not meet the composition policy",
  acceptable: "Acceptable",
};

export function labelText(label: string): string {
  return LABEL_TEXT[label] ?? label;
}

const VIOLATION_TEXT: Record<string, string> = {
  too_short: "at least 8 characters",
  too_long: "at most 10 characters",
  missing_upper: "an uppercase letter",
  missing_lower: "a lowercase letter",
  missing_digit: "a digit",
  missing_symbol: "a symbol",
};

export function violationText(code: string): string {
  return VIOLATION_TEXT[code] ?? code;
}
