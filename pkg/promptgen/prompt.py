from dataclasses import dataclass
from typing import Optional, Tuple

from frontend.nodes import quote

from . import OUTPUT_INSTRUCTION, OUTPUT_MARKER, SEMTEXT_SUFFIX, SYSTEM_PROMPT
from .values import literal_value, render_value

SYSTEM_SECTION = 'System Prompt'
INPUTS_SECTION = 'Inputs_Information'
OUTPUT_SECTION = 'Output_Information'
TYPES_SECTION = 'Type_Explanations'
ACTION_SECTION = 'Action'

INDENT = '  '


@dataclass(frozen=True)
class Section:
    # None for the closing output marker, which has no header of its own
    header: Optional[str]
    body: str

    def render(self):
        if self.header is None:
            return self.body
        if not self.body:
            return '[{}]'.format(self.header)
        return '[{}]\n{}'.format(self.header, self.body)


@dataclass(frozen=True)
class PromptDocument:
    sections: Tuple[Section, ...]

    def section(self, header):
        return next(section for section in self.sections if section.header == header)

    def render(self):
        return '\n\n'.join(section.render() for section in self.sections) + '\n'


def with_semtext(line, semtext):
    if semtext is None:
        return line
    return line + SEMTEXT_SUFFIX.format(quote(semtext))


def _object_block(entry, show_defaults):
    name = str(entry.type.value)
    if not entry.members:
        return with_semtext('({0}) (obj) eg: {0}()'.format(name), entry.type.semtext)
    lines = [with_semtext('({0}) (obj) eg: {0}('.format(name), entry.type.semtext)]
    last = len(entry.members) - 1
    for index, member in enumerate(entry.members):
        field = member.value
        line = '{}{} = {}'.format(INDENT, field.name, field.type)
        if show_defaults and field.default is not None:
            line += ' (default: {})'.format(render_value(literal_value(field.default)))
        if index != last:
            line += ','
        lines.append(with_semtext(line, member.semtext))
    lines.append(')')
    return '\n'.join(lines)


def _enum_block(entry):
    name = str(entry.type.value)
    lines = [with_semtext('({}) (enum) variants:'.format(name), entry.type.semtext)]
    last = len(entry.members) - 1
    for index, member in enumerate(entry.members):
        line = '{}{}.{}'.format(INDENT, name, member.value)
        if index != last:
            line += ','
        lines.append(with_semtext(line, member.semtext))
    return '\n'.join(lines)


def assemble_prompt(ir, bound, show_defaults=False):
    """Lay out the prompt for one call of ``ir`` with ``bound`` arguments.

    Each SemText is appended to the line that carries its entity, so the
    description sits next to the structure it describes.
    """
    inputs = [
        with_semtext('({}) ({}) = {}'.format(slot.value.name, slot.value.type, render_value(bound[slot.value.name])),
                     slot.semtext)
        for slot in ir.inputs
    ]
    blocks = []
    explained = set()
    for entry in ir.hierarchy:
        if entry.is_object:
            blocks.append(_object_block(entry, show_defaults))
        elif entry.is_enum:
            blocks.append(_enum_block(entry))
        else:
            continue
        explained.add(entry.type.value)
    output_semtext = None if ir.output.value in explained else ir.output.semtext
    return PromptDocument((
        Section(SYSTEM_SECTION, SYSTEM_PROMPT),
        Section(INPUTS_SECTION, '\n'.join(inputs)),
        Section(OUTPUT_SECTION, with_semtext('({})'.format(ir.output.value), output_semtext)),
        Section(TYPES_SECTION, '\n\n'.join(blocks)),
        Section(ACTION_SECTION, with_semtext(ir.name.value, ir.name.semtext)),
        Section(None, '{}\n\n{}'.format(OUTPUT_INSTRUCTION, OUTPUT_MARKER)),
    ))
