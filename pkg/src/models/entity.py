from typing import ClassVar

from pydantic import BaseModel, ConfigDict, Field

from src.models.timeml import allowed_attributes


class TimeMLModel(BaseModel):
    """Base model for every in-memory TimeML structure.

    Models are frozen once built; transformations produce new models.
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)


class Annotation(TimeMLModel):
    """Base model for elements that carry TimeML attributes.

    Fields are snake_case and aliased to the XML attribute name, so the XML
    attribute map of an element is its aliased dump restricted to the
    attributes the element may carry.

    Attributes:
        extra: Attributes unknown to TimeML 1.2, preserved verbatim
    """
    TAG: ClassVar[str] = ''

    extra: dict[str, str] = Field({}, description='Unknown attributes kept verbatim')

    def attributes(self) -> dict[str, str]:
        """Return the XML attribute map of this element (unknown attributes included)."""
        allowed = allowed_attributes(self.TAG)
        data = {}
        for name, info in type(self).model_fields.items():
            attribute = info.alias or name
            value = getattr(self, name)
            if attribute in allowed and isinstance(value, str):
                data[attribute] = value
        return {**data, **self.extra}


class TextBearing(Annotation):
    """Annotation wrapping a text extent.

    Attributes:
        surface_text: Decoded extent text
        raw: Verbatim source spelling of the extent, when parsed
    """
    surface_text: str = Field('', description='Decoded extent text')
    raw: str | None = Field(None, description='Verbatim source spelling of the extent')
