public interface EventListener {
    void onEvent(String event);
}
