/**
 * Phrase lists used for two read-only judgements: whether a candidate
 * region is a consent surface at all, and whether a text span is
 * celebratory microcopy. Matching is case-insensitive on collapsed
 * whitespace; classification of individual controls is the engine's job,
 * not the capture's.
 */

const CONSENT_PHRASES = [
  "cookie",
  "cookies",
  "consent",
  "privacy",
  "we value your privacy",
  "accept all",
  "reject all",
  "allow all",
  "manage preferences",
  "manage options",
  "manage settings",
  "only necessary",
  "necessary only",
  "tracking",
  "personal data",
  "gdpr",
  "partners",
];

const CELEBRATORY_PHRASES = [
  "great choice",
  "awesome",
  "thanks for sharing",
  "you're all set",
  "welcome aboard",
  "glad you're here",
  "\u{1F389}",
  "\u{2728}",
];

export function collapse(text: string): string {
  return text.replace(/\s+/g, " ").trim();
}

export function mentionsConsent(text: string): boolean {
  const hay = collapse(text).toLowerCase();
  if (!hay) return false;
  return CONSENT_PHRASES.some((phrase) => hay.includes(phrase));
}

export function isCelebratory(text: string): boolean {
  const hay = collapse(text).toLowerCase();
  if (!hay) return false;
  return CELEBRATORY_PHRASES.some((phrase) => hay.includes(phrase));
}
