public interface MediaPlayer {
    void play(String file);
}
