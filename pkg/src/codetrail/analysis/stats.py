"""Participant-level distributions over a dataset."""

from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True)
class ParticipantReport:
    """Histograms over distinct participants plus submissions per language."""

    participant_count: int
    mean_age: float | None
    age: dict
    gender: dict
    country: dict
    experience: dict
    language: dict

    def to_json(self) -> dict:
        return {
            "participantCount": self.participant_count,
            "meanAge": self.mean_age,
            "histograms": {
                "age": {str(k): v for k, v in sorted(self.age.items())},
                "gender": dict(sorted(self.gender.items())),
                "country": dict(sorted(self.country.items())),
                "experience": dict(sorted(self.experience.items())),
                "language": dict(sorted(self.language.items())),
            },
        }


def participant_stats(dataset) -> ParticipantReport:
    """Distribution report over the dataset's participants.

    Demographics count each distinct user exactly once, taken from their
    earliest received submission. The language histogram counts submissions,
    since one user may solve in several languages.
    """
    surveys = {}
    for sub in sorted(dataset.submissions, key=lambda s: s.received_at_millis):
        surveys.setdefault(sub.user_id, sub.survey)
    ages = [survey.age for survey in surveys.values()]
    return ParticipantReport(
        participant_count=len(surveys),
        mean_age=sum(ages) / len(ages) if ages else None,
        age=dict(Counter(survey.age for survey in surveys.values())),
        gender=dict(Counter(survey.gender for survey in surveys.values())),
        country=dict(Counter(survey.country for survey in surveys.values())),
        experience=dict(Counter(survey.experience for survey in surveys.values())),
        language=dict(Counter(sub.language for sub in dataset.submissions)),
    )
