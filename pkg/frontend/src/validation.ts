// Client-side mirror of the survey rules the daemon enforces, so invalid
// input is caught in the form and never leaves the page.

import type { SurveyPayload } from "./api.js";

export const EXPERIENCE_LEVELS = [
  "none",
  "less_than_half_year",
  "half_to_one_year",
  "one_to_two_years",
  "two_to_four_years",
  "four_to_six_years",
  "more_than_six_years",
] as const;

export const GENDER_OPTIONS = ["female", "male", "other", "undefined"] as const;

/** Raw form values, before any parsing. */
export interface SurveyDraft {
  gender: string;
  age: string;
  country: string;
  experience: string;
}

/** Field name -> translation key of the error message to show inline. */
export type SurveyErrors = Partial<Record<keyof SurveyDraft, string>>;

const AGE_RE = /^\d+$/;
const COUNTRY_RE = /^\p{L}{2}$/u;

export function validateSurvey(draft: SurveyDraft): SurveyErrors {
  const errors: SurveyErrors = {};
  const age = draft.age.trim();
  if (!AGE_RE.test(age) || Number(age) > 150) {
    errors.age = "survey.invalid_age";
  }
  if (!COUNTRY_RE.test(draft.country.trim())) {
    errors.country = "survey.invalid_country";
  }
  if (!(GENDER_OPTIONS as readonly string[]).includes(draft.gender)) {
    errors.gender = "survey.invalid_gender";
  }
  if (!(EXPERIENCE_LEVELS as readonly string[]).includes(draft.experience)) {
    errors.experience = "survey.invalid_experience";
  }
  return errors;
}

/** Convert a validated draft into the payload the daemon expects. */
export function surveyPayload(draft: SurveyDraft): SurveyPayload {
  return {
    gender: draft.gender,
    age: Number(draft.age.trim()),
    country: draft.country.trim(),
    experience: draft.experience,
  };
}
