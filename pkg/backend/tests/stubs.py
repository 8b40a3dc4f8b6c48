"""Stand-in chat-completions endpoints served by the live test server."""
import json
import threading
import time

from django.http import HttpResponse, JsonResponse
from django.urls import path
from django.views.decorators.http import require_POST

REPLY = 'AgentTypes.END'

received = []
_lock = threading.Lock()
_flaky_calls = [0]


def reset():
    with _lock:
        received.clear()
        _flaky_calls[0] = 0


def envelope(content, usage=True):
    data = {
        'id': 'chatcmpl-test',
        'object': 'chat.completion',
        'choices': [{'index': 0, 'message': {'role': 'assistant', 'content': content}, 'finish_reason': 'stop'}],
    }
    if usage:
        data['usage'] = {'prompt_tokens': 120, 'completion_tokens': 4, 'total_tokens': 124}
    return data


def _record(request):
    with _lock:
        received.append({
            'body': json.loads(request.body),
            'authorization': request.headers.get('Authorization'),
        })


@require_POST
def ok(request):
    _record(request)
    return JsonResponse(envelope(REPLY))


@require_POST
def flaky(request):
    _record(request)
    with _lock:
        _flaky_calls[0] += 1
        calls = _flaky_calls[0]
    if calls <= 2:
        return JsonResponse({'error': {'message': 'rate limited'}}, status=429)
    return JsonResponse(envelope(REPLY, usage=False))


@require_POST
def unavailable(request):
    _record(request)
    return HttpResponse('upstream down', status=503)


@require_POST
def rejected(request):
    _record(request)
    return JsonResponse({'error': {'message': 'model not found'}}, status=404)


@require_POST
def not_json(request):
    return HttpResponse('<html>gateway</html>', content_type='text/html')


@require_POST
def no_choices(request):
    return JsonResponse({'choices': []})


@require_POST
def slow(request):
    time.sleep(0.5)
    return JsonResponse(envelope(REPLY))


urlpatterns = [
    path('{}/v1/chat/completions'.format(view.__name__), view)
    for view in (ok, flaky, unavailable, rejected, not_json, no_choices, slow)
]
